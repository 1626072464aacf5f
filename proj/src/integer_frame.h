#pragma once

#include "exitgraph/rational.h"

#include <cstdint>
#include <span>
#include <vector>

namespace exitgraph::detail {

/// Values multiplied by the lcm of their denominators. A positive common
/// scale leaves every sign of a homogeneous predicate unchanged.
struct IntegerFrame {
    std::vector<mpz_class> values;
    /// Set when every |value| < 2^61, so differences fit in int64 and
    /// products of two differences fit in __int128.
    bool fits_int64 = false;

    std::vector<std::int64_t> as_int64() const {
        std::vector<std::int64_t> out;
        out.reserve(values.size());
        for (const auto& v : values) out.push_back(static_cast<std::int64_t>(v.get_si()));
        return out;
    }
};

inline IntegerFrame make_integer_frame(std::span<const Rational> values) {
    mpz_class scale = 1;
    for (const auto& v : values) {
        if (v.is_integer()) continue;
        mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), v.value().get_den_mpz_t());
    }
    IntegerFrame frame;
    frame.values.reserve(values.size());
    frame.fits_int64 = true;
    const mpz_class limit = mpz_class(1) << 61;
    for (const auto& v : values) {
        mpz_class scaled = v.value().get_num() * (scale / v.value().get_den());
        if (abs(scaled) >= limit) frame.fits_int64 = false;
        frame.values.push_back(std::move(scaled));
    }
    return frame;
}

template <class Int>
inline int sign_of(const Int& v) {
    return (v > 0) - (v < 0);
}

inline int sign_of(const mpz_class& v) { return sgn(v); }

}  // namespace exitgraph::detail
