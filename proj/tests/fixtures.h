#pragma once

#include <string>
#include <utility>
#include <vector>

// Small point sets with exit edges frozen from the independent Python oracle
// in tests/oracles. Witness notation: label followed by L or R, the side of
// the directed edge lower label -> higher label.
namespace fixtures {

struct Case {
    std::string name;
    std::vector<std::pair<long, long>> points;
    std::string edges;
};

inline const std::vector<Case>& cases() {
    static const std::vector<Case> all{
        {"triangle", {{0, 0}, {4, 0}, {2, 4}}, "{0,1}:2L; {0,2}:1R; {1,2}:0L"},
        {"square", {{0, 0}, {1, 0}, {1, 1}, {0, 1}}, "{0,2}:1R,3L; {1,3}:0L,2R"},
        {"two_triangles", {{-5, 5}, {5, 5}, {-5, -5}, {5, -5}, {-3, 2}, {-3, -2}},
         "{0,3}:1L,4R; {0,5}:4L; {1,2}:3L,5R; {2,4}:5R"},
        {"triangle_plus_interior", {{0, 0}, {4, 0}, {2, 4}, {2, 1}}, "{0,1}:3L; {0,2}:3R; {1,2}:3L"},
        {"pentagon", {{0, 0}, {4, 0}, {5, 3}, {2, 5}, {-1, 3}}, "{0,2}:1R; {0,3}:4L; {1,3}:2R; {1,4}:0L; {2,4}:3R"},
        {"quad_plus_one", {{0, 0}, {6, 0}, {6, 6}, {0, 6}, {2, 3}}, "{0,2}:1R,4L; {0,3}:4R; {1,3}:2R,4L"},
        {"triangle_plus_two", {{0, 0}, {10, 0}, {5, 10}, {4, 3}, {6, 4}}, "{0,2}:3R; {0,4}:3L; {1,2}:4L; {1,3}:4R"},
    };
    return all;
}

}  // namespace fixtures
