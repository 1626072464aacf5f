#pragma once

#include "exitgraph/exit_oracle.h"
#include "exitgraph/geometry.h"

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace exitgraph {

/// Dual of point (p_x, p_y): the line y = p_x * x - p_y.
struct DualLine {
    Rational slope;
    Rational intercept;
    Label source;
};

/// Throws NonDistinctSlopes when two points share an x-coordinate.
std::vector<DualLine> dualize(const PointSet& s);

using VertexId = std::uint32_t;
using CellId = std::uint32_t;

struct RationalPoint {
    Rational x;
    Rational y;
    friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
};

struct ArrangementVertex {
    std::array<Label, 2> lines;  // source labels, ascending
};

/// Edge of a cell boundary, from `vertex` to the vertex of the next entry,
/// lying on `line`.
struct BoundaryEntry {
    VertexId vertex;
    Label line;
    /// The edge passes through the point at infinity of its line.
    bool through_infinity;
    /// The boundary walk runs along the line's left-to-right direction.
    bool forward;
};

struct ProjectiveCell {
    CellId id;
    std::vector<BoundaryEntry> boundary;  // closed cycle
    bool marked;

    std::size_t side_count() const { return boundary.size(); }
    bool consistently_oriented() const;
};

/// Open half-plane above (or below) a dual line.
struct HalfPlane {
    Label line;
    bool above;
};

/// Simple projective arrangement of non-vertical lines with pairwise
/// distinct slopes: the Euclidean arrangement with each unbounded face glued
/// to its antipodal partner.
class ProjectiveArrangement {
public:
    std::size_t line_count() const { return lines_.size(); }
    std::size_t vertex_count() const { return vertex_lines_.size(); }
    std::size_t edge_count() const;
    std::size_t cell_count() const { return cell_offset_.size() - 1; }

    const DualLine& line(Label source) const { return lines_[rank(source)]; }
    /// Lines in increasing slope order.
    const std::vector<DualLine>& lines() const { return lines_; }

    ArrangementVertex vertex(VertexId v) const;
    RationalPoint position(VertexId v) const;
    std::optional<VertexId> vertex_at(Label a, Label b) const;
    /// All vertices, sorted by their source-label pairs.
    std::vector<VertexId> vertices() const;
    /// Vertices on a line, by increasing x.
    std::vector<VertexId> vertices_on_line(Label source) const;

    ProjectiveCell cell(CellId id) const;
    /// Entry i of the cell's boundary cycle, without materializing the cell.
    BoundaryEntry boundary_entry(CellId id, std::size_t i) const;
    std::size_t side_count(CellId id) const { return cell_offset_[id + 1] - cell_offset_[id]; }
    bool is_bounded(CellId id) const { return cell_split_[id] == 0; }
    CellId marked_cell() const { return marked_; }

    /// Convex Euclidean pieces of a cell: one for a bounded cell, two for a
    /// cell that crosses the line at infinity.
    std::vector<std::vector<HalfPlane>> euclidean_parts(CellId id) const;
    /// An exact point strictly inside the cell (in its first Euclidean piece).
    RationalPoint interior_point(CellId id) const;
    /// Bounding box (min corner, max corner) of all vertices.
    std::pair<RationalPoint, RationalPoint> bounding_box() const;

    /// Bytes held by the topology and cell tables.
    std::size_t memory_bytes() const;

private:
    friend ProjectiveArrangement build_arrangement(std::vector<DualLine> lines);

    std::uint32_t rank(Label source) const;
    std::uint32_t other_line(VertexId v, std::uint32_t rank) const;

    std::vector<DualLine> lines_;
    std::vector<std::uint32_t> rank_of_source_;
    std::vector<std::array<std::uint32_t, 2>> vertex_lines_;  // slope ranks, ascending
    // Row r lists the vertices on the line of rank r by increasing x.
    std::vector<std::uint32_t> line_vertices_;

    // Cell boundaries, CSR layout. Each packed entry holds the vertex and the
    // slope rank with the through-infinity and forward flags in the top bits.
    std::vector<std::uint32_t> entry_vertex_;
    std::vector<std::uint32_t> entry_line_;
    std::vector<std::uint32_t> cell_offset_;
    // Number of leading entries from the first Euclidean face; 0 if bounded.
    std::vector<std::uint32_t> cell_split_;
    CellId marked_ = 0;
};

/// Topological sweep: O(n^2) time, and O(n) working space besides the
/// output. Vertex ids follow the sweep order. Needs at least two lines;
/// throws NonDistinctSlopes or ConcurrentLines on degenerate input.
ProjectiveArrangement build_arrangement(std::vector<DualLine> lines);

/// The cell containing vertical infinity (above all lines glued to below all
/// lines).
CellId marked_cell(const ProjectiveArrangement& arr);

std::vector<CellId> consistently_oriented_cells(const ProjectiveArrangement& arr);

struct LineDirection {
    Label line;
    int direction;  // +1: increasing x
};

/// Left-to-right orientation of every line, sorted by source label.
std::vector<LineDirection> orient_lines(const ProjectiveArrangement& arr);

/// Orientation by repeatedly orienting the boundary of the marked cell and
/// peeling those lines off. `sense` +1 walks the upper envelope rightward.
std::vector<LineDirection> orient_lines_by_peeling(const ProjectiveArrangement& arr, int sense = 1);

struct TriangularCell {
    CellId cell;
    std::array<VertexId, 3> vertices;
    std::array<Label, 3> lines;
    bool marked;
    std::optional<VertexId> exit_vertex;
    std::optional<std::array<Label, 2>> exit_lines;  // ascending
    std::optional<Label> witness_line;
};

/// All 3-sided cells, ordered by their sorted line triples. Unmarked ones
/// carry the exit vertex (the middle of the transitive order given by the
/// edge directions) and the witness line.
std::vector<TriangularCell> triangular_cells(const ProjectiveArrangement& arr);

/// Exit vertex of a bounded triangle as the vertex of median x; nullopt for
/// triangles crossing the line at infinity.
std::optional<VertexId> exit_vertex_by_median_x(const ProjectiveArrangement& arr, const TriangularCell& tri);

struct Hourglass {
    std::array<std::size_t, 2> cells;  // indices into the triangle list
    VertexId shared_exit_vertex;
    std::array<Label, 2> slicing_lines;
};

/// Pairs of unmarked triangular cells sharing an exit vertex. Throws
/// TripleSharedExitVertex if three triangles share one.
std::vector<Hourglass> hourglasses(const std::vector<TriangularCell>& tris);

struct DualComputation {
    ShearResult shear;
    ProjectiveArrangement arrangement;
    std::vector<TriangularCell> triangles;
    std::vector<Hourglass> hourglasses;
    std::vector<ExitEdge> edges;
};

/// Shear, dualize, build, extract triangles and map them back to exit edges.
DualComputation compute_dual(const PointSet& s);

/// Exit edges with witnesses from the unmarked triangular cells; identical
/// output to exit_edges_bruteforce.
std::vector<ExitEdge> exit_edges_dual(const PointSet& s);

struct HalfplaneTriangleCheck {
    /// Two lines other than l1, l2 cross inside the half-plane of (l1, l2)
    /// that avoids the marked cell.
    bool premise;
    /// Some triangular cell in that half-plane touches l1 but not l2.
    bool conclusion;
};

HalfplaneTriangleCheck check_halfplane_triangles(const ProjectiveArrangement& arr,
                                                 const std::vector<TriangularCell>& tris, Label l1, Label l2);

}  // namespace exitgraph
