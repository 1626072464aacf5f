#pragma once

#include "exitgraph/rational.h"

#include <compare>
#include <string>
#include <vector>

namespace exitgraph {

/// Exact real number a + b*sqrt(d) with rational a, b and a positive
/// integer radicand d that is not a perfect square. Rationals have b = 0
/// and d = 0. Numbers with different radicands still compare exactly.
class QuadraticNumber {
public:
    QuadraticNumber() = default;
    QuadraticNumber(Rational a);  // NOLINT: implicit by design
    QuadraticNumber(Rational a, Rational b, Rational d);

    const Rational& rational_part() const { return a_; }
    const Rational& radical_coefficient() const { return b_; }
    const mpz_class& radicand() const { return d_; }
    bool is_rational() const { return b_.is_zero(); }

    int sign() const;
    double to_double() const;
    /// "a", or "a + b*sqrt(d)" / "a - b*sqrt(d)" with a omitted when zero.
    std::string to_string() const;
    std::string to_decimal(int significant_digits) const;

    /// Field operations; both operands must be rational or share the radicand.
    friend QuadraticNumber operator+(const QuadraticNumber& x, const QuadraticNumber& y);
    friend QuadraticNumber operator-(const QuadraticNumber& x, const QuadraticNumber& y);
    friend QuadraticNumber operator*(const QuadraticNumber& x, const QuadraticNumber& y);
    friend QuadraticNumber operator-(const QuadraticNumber& x);

    friend std::strong_ordering operator<=>(const QuadraticNumber& x, const QuadraticNumber& y);
    friend bool operator==(const QuadraticNumber& x, const QuadraticNumber& y) { return (x <=> y) == 0; }

private:
    Rational a_;
    Rational b_;
    mpz_class d_;
};

/// Real roots of A t^2 + B t + C in increasing order, without repetition.
/// Throws std::invalid_argument for the zero polynomial.
std::vector<QuadraticNumber> real_roots(const Rational& A, const Rational& B, const Rational& C);

}  // namespace exitgraph
