#pragma once

#include "exitgraph/arrangement.h"
#include "exitgraph/exit_oracle.h"
#include "exitgraph/geometry.h"
#include "exitgraph/quadratic.h"

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace exitgraph {

struct LineStats {
    Label source;
    std::size_t t;  // triangular cells on the line, the marked one included
    std::size_t h;  // hourglasses sliced by the line
    Rational x;     // t - h/2
};

struct Verdict {
    std::string name;
    bool holds;
};

struct StatsReport {
    std::size_t n = 0;
    std::size_t T = 0;  // all triangular cells, the marked one included
    std::size_t T_unmarked = 0;
    std::size_t H = 0;
    std::size_t exit_edge_count = 0;
    std::vector<LineStats> per_line;  // by source label
    Rational lower_bound;             // (3n-7)/5
    Rational upper_bound;             // n(n-1)/3
    Rational sum_x;
    std::vector<Verdict> verdicts;

    bool all_hold() const;
};

/// Counts and bound checks from the dual arrangement. Throws TooFewPoints
/// for n < 4.
StatsReport stats_report(const PointSet& s);
StatsReport stats_report(const PointSet& s, const DualComputation& dual);

struct ArrangementCheck {
    bool vertex_count;
    bool edge_count;
    bool cell_count;
    bool unique_consistent_cell_is_marked;
    /// Every line borders at least three triangular cells (checked for n >= 4).
    bool three_triangles_per_line;

    bool all_hold() const;
};

ArrangementCheck check_arrangement(const DualComputation& dual);

/// Unordered pairs of exit edges whose open segments cross.
std::size_t exit_graph_crossings(const PointSet& s);
std::size_t exit_graph_crossings(const PointSet& s, const std::vector<ExitEdge>& edges);

/// Labels of points on the unbounded face of the plane graph formed by the
/// exit edges, with crossings made into vertices. Sorted.
std::vector<Label> outer_face_vertices(const PointSet& s);
std::vector<Label> outer_face_vertices(const PointSet& s, const std::vector<ExitEdge>& edges);

struct MorphEvent {
    QuadraticNumber time;
    /// With between set, c lies strictly inside segment ab and a < b;
    /// otherwise the labels ascend.
    std::array<Label, 3> triple;
    bool between;
    /// Number of triples collinear at `time`; the reported one is the
    /// smallest by sorted labels.
    std::size_t collinear_triples;
};

/// First time in (0, 1] at which three points of the linear motion
/// p_i(t) = (1-t) p_i(0) + t p_i(1) are collinear, or nullopt. Throws
/// SizeMismatch, or ImmediateDegeneracy if a triple is collinear at t = 0.
std::optional<MorphEvent> first_collinearity_morph(const PointSet& s0, const std::vector<Point>& s1);

/// Same orientation for every labeled triple. Throws SizeMismatch.
bool same_order_type_labeled(const PointSet& s, const PointSet& t);

/// A relabeling phi with orientation(s_i, s_j, s_k) = orientation(t_phi(i), ...)
/// for all triples, found by exhaustive search. Only for n <= 8; throws
/// std::invalid_argument beyond that, SizeMismatch on different sizes.
std::optional<std::vector<Label>> same_order_type_unlabeled(const PointSet& s, const PointSet& t);

inline constexpr std::size_t kMaxUnlabeledSize = 8;

struct ExitStructureComparison {
    bool same_exit_structure;
    bool same_order_type;
    /// Exit edges (with witnesses) of the first set missing from the second,
    /// and the other way round. An edge whose witnesses differ is in both.
    std::vector<ExitEdge> only_in_first;
    std::vector<ExitEdge> only_in_second;
    /// Triples (ascending) whose orientation differs under the identity labeling.
    std::vector<std::array<Label, 3>> orientation_mismatches;
    /// Set for unlabeled comparisons that found a relabeling.
    std::optional<std::vector<Label>> relabeling;
};

ExitStructureComparison compare_exit_structures(const PointSet& s, const PointSet& t, bool unlabeled = false);

/// Integer coordinates uniform in [0, side]^2, resampled until in general
/// position.
PointSet random_general_position_set(std::size_t n, std::int64_t side, std::mt19937_64& rng);

struct SearchResult {
    PointSet points;
    std::size_t exit_edge_count;
    std::size_t trial;
};

/// Minimum exit-edge count over `trials` random sets with coordinates in
/// [0, 4n^2]. Trial i draws from an mt19937_64 seeded from (seed, i) alone,
/// so the result depends only on (n, trials, seed); ties go to the lowest
/// trial. threads = 0 uses the hardware concurrency.
SearchResult search_min_exit_edges(std::size_t n, std::size_t trials, std::uint64_t seed, unsigned threads = 0);

}  // namespace exitgraph
