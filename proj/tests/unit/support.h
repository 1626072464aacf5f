#pragma once

#include "exitgraph/geometry.h"

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace testsupport {

inline exitgraph::PointSet make_set(const std::vector<std::pair<long, long>>& coords) {
    std::vector<exitgraph::Point> pts;
    for (auto [x, y] : coords) pts.push_back({x, y});
    return exitgraph::PointSet::certify(std::move(pts));
}

/// Uniform integer points in [0, range]^2, resampled until in general position.
inline exitgraph::PointSet random_set(std::size_t n, long range, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> coord(0, range);
    for (;;) {
        std::vector<exitgraph::Point> pts;
        for (std::size_t i = 0; i < n; ++i) pts.push_back({coord(rng), coord(rng)});
        auto r = exitgraph::certify_general_position(std::move(pts));
        if (auto* s = std::get_if<exitgraph::PointSet>(&r)) return std::move(*s);
    }
}

}  // namespace testsupport
