#pragma once

#include "exitgraph/analysis.h"
#include "exitgraph/exit_oracle.h"
#include "exitgraph/geometry.h"

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace exitgraph {

/// Malformed point file. Lines count from 1.
class SyntaxError : public std::runtime_error {
public:
    SyntaxError(std::size_t line, const std::string& message);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// One "x y" pair per line; coordinates are integers, p/q rationals or
/// finite decimals. "#" starts a comment and blank lines are skipped.
/// Throws SyntaxError. No general-position check.
std::vector<Point> parse_point_list(std::string_view text);

/// parse_point_list followed by certification, which throws
/// Error(DuplicatePoint | CollinearTriple).
PointSet parse_points(std::string_view text);

/// Canonical form: lowest-terms coordinates, one space, one point per line.
std::string serialize_points(std::span<const Point> points);
inline std::string serialize_points(const PointSet& s) { return serialize_points(s.points()); }

/// "{0,2} witnesses {1,3}; ..." preceded by the edge count.
std::string describe_exit_edges(const std::vector<ExitEdge>& edges);

/// JSON report with a fixed field order: schema version, points, exit edges
/// with witnesses, and for n >= 4 the stats and their verdicts. Rationals
/// are strings "p/q".
std::string report_json(const PointSet& s);

enum class RenderMode { Primal, Dual };

/// Deterministic SVG 1.1 document. Primal: labeled points, dashed hull,
/// exit edges in black. Dual: the dual lines clipped to the vertex bounding
/// box plus a 10% margin, unmarked triangular cells shaded, exit vertices as
/// disks. Needs at least 3 points for the dual.
std::string render_svg(const PointSet& s, RenderMode mode);

}  // namespace exitgraph
