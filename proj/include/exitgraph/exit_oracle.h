#pragma once

#include "exitgraph/geometry.h"

#include <array>
#include <optional>
#include <utility>
#include <vector>

namespace exitgraph {

/// Side of a point relative to the directed line from an edge's lower label
/// to its higher label.
enum class Side : std::int8_t { Right = -1, Left = 1 };

struct Witness {
    Label label;
    Side side;

    friend bool operator==(const Witness&, const Witness&) = default;
    friend auto operator<=>(const Witness&, const Witness&) = default;
};

/// Exit edge {a, b} with a < b. Witnesses are sorted by label; there is
/// one or two of them.
struct ExitEdge {
    Label a;
    Label b;
    std::vector<Witness> witnesses;

    friend bool operator==(const ExitEdge&, const ExitEdge&) = default;
};

using LabelPair = std::pair<Label, Label>;

/// Double-wedge test: no line through a (resp. b) and another point of S
/// separates b (resp. a) from c.
bool is_exit_edge_with_witness(const PointSet& s, Label a, Label b, Label c);

/// Reference O(n^4) computation, sorted by (a, b).
std::vector<ExitEdge> exit_edges_bruteforce(const PointSet& s);

struct FourHole {
    /// Counterclockwise; starts with the query edge, i.e. (a, b, x, y) for a
    /// hole left of a->b and (b, a, u, v) for a hole right of it.
    std::array<Label, 4> vertices;
    bool convex;
    std::optional<Label> reflex_vertex;
    /// Side of directed a->b (query order) the hole lies on.
    Side side;
};

/// All 4-holes having ab as a side.
std::vector<FourHole> four_holes_at_edge(const PointSet& s, Label a, Label b);

/// True iff every other point lies on one side of the line ab.
bool is_extremal_edge(const PointSet& s, Label a, Label b);

/// Exit-edge endpoint pairs from the 4-hole characterization, sorted.
std::vector<LabelPair> exit_edges_via_holes(const PointSet& s);

struct ExitEdgeDiagnostic {
    Label a;
    Label b;
    bool internal;
    bool witnesses_on_both_sides;
    bool has_four_hole;
    /// For internal edges: witnesses on both sides, or some 4-hole at ab.
    /// Always true for extremal edges.
    bool remark_holds;
};

std::vector<ExitEdgeDiagnostic> diagnose_exit_edges(const PointSet& s, const std::vector<ExitEdge>& edges);

std::vector<LabelPair> endpoint_pairs(const std::vector<ExitEdge>& edges);

}  // namespace exitgraph
