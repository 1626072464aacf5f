#include "exitgraph/quadratic.h"

#include <cmath>
#include <stdexcept>

namespace exitgraph {

namespace {

/// Sign of a + b*sqrt(d) for any d >= 0.
int sign_with_root(const Rational& a, const Rational& b, const mpz_class& d) {
    const int sa = a.sign();
    const int sb = d == 0 ? 0 : b.sign();
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    const int c = cmp((a * a).value(), (b * b).value() * d);
    if (c == 0) return 0;
    return c > 0 ? sa : sb;
}

const mpz_class& common_radicand(const QuadraticNumber& x, const QuadraticNumber& y) {
    if (x.is_rational()) return y.radicand();
    if (!y.is_rational() && x.radicand() != y.radicand()) throw std::domain_error("operands lie in different quadratic fields");
    return x.radicand();
}

}  // namespace

QuadraticNumber::QuadraticNumber(Rational a) : a_(std::move(a)) {}

QuadraticNumber::QuadraticNumber(Rational a, Rational b, Rational d) : a_(std::move(a)), b_(std::move(b)) {
    if (d.sign() < 0) throw std::domain_error("negative radicand");
    if (b_.is_zero() || d.is_zero()) {
        b_ = Rational(0);
        return;
    }
    // sqrt(p/q) = sqrt(p*q)/q
    mpz_class r = d.numerator() * d.denominator();
    b_ /= Rational(d.denominator());
    mpz_class k = 1;
    for (unsigned long p = 2; p < 1000 && p * p <= r; ++p) {
        const unsigned long sq = p * p;
        while (mpz_divisible_ui_p(r.get_mpz_t(), sq)) {
            r /= sq;
            k *= p;
        }
    }
    b_ *= Rational(k);
    if (mpz_perfect_square_p(r.get_mpz_t())) {
        mpz_class root;
        mpz_sqrt(root.get_mpz_t(), r.get_mpz_t());
        a_ += b_ * Rational(root);
        b_ = Rational(0);
        return;
    }
    d_ = r;
}

int QuadraticNumber::sign() const { return sign_with_root(a_, b_, d_); }

double QuadraticNumber::to_double() const {
    if (is_rational()) return a_.to_double();
    return a_.to_double() + b_.to_double() * std::sqrt(d_.get_d());
}

std::string QuadraticNumber::to_string() const {
    if (is_rational()) return a_.to_string();
    std::string root = "sqrt(" + d_.get_str() + ")";
    const Rational mag = b_.abs();
    std::string term = mag == Rational(1) ? root : mag.to_string() + "*" + root;
    if (a_.is_zero()) return b_.sign() < 0 ? "-" + term : term;
    return a_.to_string() + (b_.sign() < 0 ? " - " : " + ") + term;
}

std::string QuadraticNumber::to_decimal(int significant_digits) const {
    if (is_rational()) return a_.to_decimal(significant_digits);
    // Truncated square root with ample guard digits.
    const unsigned long guard = static_cast<unsigned long>(significant_digits) + 20 + mpz_sizeinbase(d_.get_mpz_t(), 10);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, guard);
    mpz_class scaled = d_ * scale * scale, root;
    mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
    const Rational approx = a_ + b_ * Rational(root, scale);
    return approx.to_decimal(significant_digits);
}

QuadraticNumber operator+(const QuadraticNumber& x, const QuadraticNumber& y) {
    const mpz_class d = common_radicand(x, y);
    return QuadraticNumber(x.a_ + y.a_, x.b_ + y.b_, Rational(d));
}

QuadraticNumber operator-(const QuadraticNumber& x, const QuadraticNumber& y) { return x + (-y); }

QuadraticNumber operator-(const QuadraticNumber& x) {
    QuadraticNumber r = x;
    r.a_ = -r.a_;
    r.b_ = -r.b_;
    return r;
}

QuadraticNumber operator*(const QuadraticNumber& x, const QuadraticNumber& y) {
    const mpz_class d = common_radicand(x, y);
    return QuadraticNumber(x.a_ * y.a_ + x.b_ * y.b_ * Rational(d), x.a_ * y.b_ + x.b_ * y.a_, Rational(d));
}

std::strong_ordering operator<=>(const QuadraticNumber& x, const QuadraticNumber& y) {
    auto as_ordering = [](int s) {
        return s < 0 ? std::strong_ordering::less : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    };
    if (x.is_rational() || y.is_rational() || x.d_ == y.d_) return as_ordering((x - y).sign());

    // x - y = alpha + beta*sqrt(d1) + gamma*sqrt(d2)
    const Rational alpha = x.a_ - y.a_;
    const Rational& beta = x.b_;
    const Rational gamma = -y.b_;
    const Rational p = beta * beta * Rational(x.d_);
    const Rational q = gamma * gamma * Rational(y.d_);
    int s_roots;
    if (beta.sign() == gamma.sign()) s_roots = beta.sign();
    else if (p == q) s_roots = 0;
    else s_roots = p > q ? beta.sign() : gamma.sign();

    const int sa = alpha.sign();
    if (s_roots == 0) return as_ordering(sa);
    if (sa == 0 || sa == s_roots) return as_ordering(s_roots);
    // Compare alpha^2 with (beta*sqrt(d1) + gamma*sqrt(d2))^2.
    const int c = sign_with_root(alpha * alpha - p - q, Rational(-2) * beta * gamma, x.d_ * y.d_);
    if (c == 0) return std::strong_ordering::equal;
    return as_ordering(c > 0 ? sa : s_roots);
}

std::vector<QuadraticNumber> real_roots(const Rational& A, const Rational& B, const Rational& C) {
    if (A.is_zero()) {
        if (B.is_zero()) {
            if (C.is_zero()) throw std::invalid_argument("zero polynomial");
            return {};
        }
        return {QuadraticNumber(-C / B)};
    }
    const Rational disc = B * B - Rational(4) * A * C;
    if (disc.sign() < 0) return {};
    const Rational mid = -B / (Rational(2) * A);
    if (disc.is_zero()) return {QuadraticNumber(mid)};
    const Rational half = Rational(1) / (Rational(2) * A.abs());
    QuadraticNumber lo(mid, -half, disc), hi(mid, half, disc);
    return {lo, hi};
}

}  // namespace exitgraph
