#include "doctest.h"
#include "exitgraph/quadratic.h"

#include <cmath>
#include <random>

using namespace exitgraph;

namespace {

QuadraticNumber q(long a, long b, long d) { return QuadraticNumber(Rational(a), Rational(b), Rational(d)); }

}  // namespace

TEST_CASE("normalization pulls square factors out of the radicand") {
    const auto x = q(0, 1, 8);
    CHECK(x.radicand() == 2);
    CHECK(x.radical_coefficient() == Rational(2));
    CHECK(x.to_string() == "2*sqrt(2)");

    const auto y = q(1, 3, 9);
    CHECK(y.is_rational());
    CHECK(y.rational_part() == Rational(10));

    // sqrt(1/2) = sqrt(2)/2
    const QuadraticNumber z(Rational(0), Rational(1), Rational(1, 2));
    CHECK(z.to_string() == "1/2*sqrt(2)");
    CHECK(q(3, -1, 5).to_string() == "3 - sqrt(5)");
    CHECK(q(0, -1, 5).to_string() == "-sqrt(5)");
    CHECK(QuadraticNumber(Rational(-7, 3)).to_string() == "-7/3");
    CHECK_THROWS_AS(q(0, 1, -2), std::domain_error);
}

TEST_CASE("signs") {
    CHECK(q(3, -2, 2).sign() == 1);   // 3 > 2.828
    CHECK(q(1, -1, 2).sign() == -1);
    CHECK(q(-3, 2, 2).sign() == -1);
    CHECK(q(0, 0, 0).sign() == 0);
    CHECK(q(-1, 1, 3).sign() == 1);
}

TEST_CASE("comparison within and across fields") {
    CHECK(q(0, 1, 2) < QuadraticNumber(Rational(141422, 100000)));
    CHECK(q(0, 1, 2) > QuadraticNumber(Rational(141421, 100000)));
    CHECK(q(0, 1, 2) == q(0, 1, 2));
    CHECK(q(0, 1, 8) == q(0, 2, 2));
    // sqrt(2) + 1 vs sqrt(6): 2.4142 < 2.4495
    CHECK(q(1, 1, 2) < q(0, 1, 6));
    // 2 + sqrt(3) vs 1 + sqrt(7): 3.7321 > 3.6458
    CHECK(q(2, 1, 3) > q(1, 1, 7));
    // -sqrt(2) vs -1 - sqrt(3)/4: -1.4142 < -1.4330 is false
    CHECK(q(0, -1, 2) > QuadraticNumber(Rational(-1), Rational(-1, 4), Rational(3)));

    std::mt19937_64 rng(17);
    std::uniform_int_distribution<long> small(-9, 9), rad(2, 30);
    for (int i = 0; i < 3000; ++i) {
        const auto x = q(small(rng), small(rng), rad(rng));
        const auto y = q(small(rng), small(rng), rad(rng));
        const double dx = x.to_double(), dy = y.to_double();
        if (std::abs(dx - dy) < 1e-9) continue;
        CHECK((x < y) == (dx < dy));
        CHECK((y < x) == (dy < dx));
    }
}

TEST_CASE("field arithmetic") {
    const auto x = q(1, 1, 2), y = q(3, -2, 2);
    CHECK(x * y == q(-1, 1, 2));  // (1+r)(3-2r) = 3 - 2r + 3r - 4 = -1 + r
    CHECK(x + y == q(4, -1, 2));
    CHECK(x - x == QuadraticNumber(Rational(0)));
    CHECK((x * QuadraticNumber(Rational(2))) == q(2, 2, 2));
    CHECK_THROWS_AS(x + q(0, 1, 3), std::domain_error);
}

TEST_CASE("real roots") {
    auto r = real_roots(Rational(1), Rational(0), Rational(-2));
    REQUIRE(r.size() == 2);
    CHECK(r[0] == q(0, -1, 2));
    CHECK(r[1] == q(0, 1, 2));

    r = real_roots(Rational(-1), Rational(0), Rational(2));
    REQUIRE(r.size() == 2);
    CHECK(r[0] < r[1]);

    r = real_roots(Rational(1), Rational(-2), Rational(1));
    REQUIRE(r.size() == 1);
    CHECK(r[0] == QuadraticNumber(Rational(1)));

    CHECK(real_roots(Rational(1), Rational(0), Rational(1)).empty());
    r = real_roots(Rational(0), Rational(2), Rational(-1));
    REQUIRE(r.size() == 1);
    CHECK(r[0] == QuadraticNumber(Rational(1, 2)));
    CHECK(real_roots(Rational(0), Rational(0), Rational(3)).empty());
    CHECK_THROWS_AS(real_roots(Rational(0), Rational(0), Rational(0)), std::invalid_argument);

    // Roots plug back in exactly.
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> c(-20, 20);
    for (int i = 0; i < 500; ++i) {
        const Rational A(c(rng), 7), B(c(rng), 3), C(c(rng));
        if (A.is_zero() && B.is_zero()) continue;
        for (const auto& t : real_roots(A, B, C)) {
            const auto v = QuadraticNumber(A) * t * t + QuadraticNumber(B) * t + QuadraticNumber(C);
            CHECK(v.sign() == 0);
        }
    }
}

TEST_CASE("decimal rendering") {
    CHECK(q(0, 1, 2).to_decimal(20) == "1.4142135623730950488");
    CHECK(q(1, -1, 2).to_decimal(6) == "-0.414214");
    CHECK(QuadraticNumber(Rational(1, 4)).to_decimal(5) == "0.25");
}
