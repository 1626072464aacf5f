#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstddef>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

namespace exitgraph {

/// Exact rational number. Always stored in lowest terms with a positive
/// denominator.
class Rational {
public:
    Rational() = default;

    template <std::integral T>
    Rational(T value) : value_(static_cast<long>(value)) {}

    /// Throws std::domain_error if den is zero.
    Rational(long num, long den);
    Rational(const mpz_class& num, const mpz_class& den);
    explicit Rational(const mpz_class& value);
    explicit Rational(mpq_class value);

    /// Accepts "p", "-p", "p/q" and finite decimals such as "-0.6".
    /// Throws std::invalid_argument on anything else.
    static Rational parse(std::string_view text);

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }
    const mpq_class& value() const { return value_; }

    int sign() const { return sgn(value_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return value_.get_den() == 1; }

    double to_double() const { return value_.get_d(); }

    /// "p" for integers, "p/q" otherwise.
    std::string to_string() const;

    /// Plain decimal notation rounded to the given number of significant
    /// digits, trailing zeros trimmed.
    std::string to_decimal(int significant_digits) const;

    Rational abs() const;
    mpz_class floor() const;
    mpz_class ceil() const;

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
    mpq_class value_{0};
};

}  // namespace exitgraph

template <>
struct std::hash<exitgraph::Rational> {
    std::size_t operator()(const exitgraph::Rational& r) const noexcept;
};
