#include "exitgraph/rational.h"

#include <stdexcept>
#include <string>

namespace exitgraph {

namespace {

mpz_class pow10(unsigned long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
    return r;
}

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

}  // namespace

Rational::Rational(long num, long den) {
    if (den == 0) throw std::domain_error("zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::domain_error("zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational::Rational(const mpz_class& value) : value_(value) {}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty number");
    std::string_view body = text;
    bool negative = false;
    if (body.front() == '-' || body.front() == '+') {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    mpz_class num, den;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        auto p = body.substr(0, slash);
        auto q = body.substr(slash + 1);
        if (!all_digits(p) || !all_digits(q)) throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
        num = mpz_class(std::string(p), 10);
        den = mpz_class(std::string(q), 10);
        if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
        auto ip = body.substr(0, dot);
        auto fp = body.substr(dot + 1);
        if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)))
            throw std::invalid_argument("malformed decimal '" + std::string(text) + "'");
        num = mpz_class(std::string(ip.empty() ? "0" : ip) + std::string(fp), 10);
        den = pow10(fp.size());
    } else {
        if (!all_digits(body)) throw std::invalid_argument("malformed integer '" + std::string(text) + "'");
        num = mpz_class(std::string(body), 10);
        den = 1;
    }
    if (negative) num = -num;
    return Rational(num, den);
}

std::string Rational::to_string() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::to_decimal(int significant_digits) const {
    if (significant_digits < 1) throw std::invalid_argument("significant_digits must be positive");
    if (is_zero()) return "0";
    const bool negative = sign() < 0;
    mpz_class n = ::abs(value_.get_num());
    const mpz_class d = value_.get_den();

    // Decimal exponent e with 10^e <= n/d < 10^(e+1).
    auto at_least = [&](long e) {
        return e >= 0 ? n >= d * pow10(static_cast<unsigned long>(e))
                      : n * pow10(static_cast<unsigned long>(-e)) >= d;
    };
    long e = static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 10)) - static_cast<long>(mpz_sizeinbase(d.get_mpz_t(), 10));
    while (!at_least(e)) --e;
    while (at_least(e + 1)) ++e;

    auto scaled = [&](long shift) {
        mpz_class num = n, den = d;
        if (shift >= 0) num *= pow10(static_cast<unsigned long>(shift));
        else den *= pow10(static_cast<unsigned long>(-shift));
        mpz_class q = (2 * num + den) / (2 * den);
        return q;
    };
    long shift = significant_digits - 1 - e;
    mpz_class s = scaled(shift);
    if (s == pow10(static_cast<unsigned long>(significant_digits))) {
        ++e;
        shift = significant_digits - 1 - e;
        s = scaled(shift);
    }

    std::string digits = s.get_str();
    std::string out;
    const long len = static_cast<long>(digits.size());
    if (shift <= 0) {
        out = digits + std::string(static_cast<std::size_t>(-shift), '0');
    } else if (shift >= len) {
        out = "0." + std::string(static_cast<std::size_t>(shift - len), '0') + digits;
    } else {
        out = digits.substr(0, static_cast<std::size_t>(len - shift)) + "." + digits.substr(static_cast<std::size_t>(len - shift));
    }
    if (out.find('.') != std::string::npos) {
        while (out.back() == '0') out.pop_back();
        if (out.back() == '.') out.pop_back();
    }
    return negative ? "-" + out : out;
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

mpz_class Rational::floor() const {
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return r;
}

mpz_class Rational::ceil() const {
    mpz_class r;
    mpz_cdiv_q(r.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    value_ /= o.value_;
    return *this;
}

}  // namespace exitgraph

std::size_t std::hash<exitgraph::Rational>::operator()(const exitgraph::Rational& r) const noexcept {
    const std::size_t h1 = std::hash<std::string>{}(r.numerator().get_str(16));
    const std::size_t h2 = std::hash<std::string>{}(r.denominator().get_str(16));
    return h1 ^ (h2 + 0x9e3779b97f4a7c15ULL + (h1 << 6) + (h1 >> 2));
}
