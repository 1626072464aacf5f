#include "exitgraph/exit_oracle.h"

#include <algorithm>

namespace exitgraph {

namespace {

void check_labels(const PointSet& s, std::initializer_list<Label> labels) {
    for (Label l : labels)
        if (l >= s.size()) throw Error(ErrorKind::LabelOutOfRange, {l});
    for (auto i = labels.begin(); i != labels.end(); ++i)
        for (auto j = std::next(i); j != labels.end(); ++j)
            if (*i == *j) throw Error(ErrorKind::NonDistinctLabels, std::vector<Label>(labels));
}

bool witness_holds(const OrientationTable& o, Label a, Label b, Label c) {
    const std::size_t n = o.size();
    for (Label p = 0; p < n; ++p) {
        if (p == a || p == b || p == c) continue;
        if (o(a, p, b) * o(a, p, c) < 0) return false;
        if (o(b, p, a) * o(b, p, c) < 0) return false;
    }
    return true;
}

bool strictly_inside_triangle(const OrientationTable& o, Label u, Label v, Label w, Label p) {
    const int s1 = o(u, v, p);
    return s1 != 0 && o(v, w, p) == s1 && o(w, u, p) == s1;
}

bool crosses(const OrientationTable& o, Label a, Label b, Label c, Label d) {
    return o(a, b, c) * o(a, b, d) < 0 && o(c, d, a) * o(c, d, b) < 0;
}

/// Calls visit(hole) for every 4-hole with side ab until it returns false.
template <class Visit>
void for_each_hole(const OrientationTable& o, Label a, Label b, Visit&& visit) {
    const std::size_t n = o.size();
    for (Label x = 0; x < n; ++x) {
        if (x == a || x == b) continue;
        for (Label y = 0; y < n; ++y) {
            if (y == a || y == b || y == x) continue;
            const std::array<Label, 4> v{a, b, x, y};
            if (crosses(o, a, b, x, y) || crosses(o, b, x, y, a)) continue;

            std::array<int, 4> turn{};
            for (int i = 0; i < 4; ++i) turn[i] = o(v[(i + 3) % 4], v[i], v[(i + 1) % 4]);
            const int total = turn[0] + turn[1] + turn[2] + turn[3];
            const int orient = total > 0 ? 1 : -1;
            int reflex = -1;
            for (int i = 0; i < 4; ++i)
                if (turn[i] != orient) reflex = i;

            // Split along the diagonal from the reflex vertex, which lies inside.
            const int r = reflex < 0 ? 0 : reflex;
            const Label d0 = v[r], d1 = v[(r + 1) % 4], d2 = v[(r + 2) % 4], d3 = v[(r + 3) % 4];
            bool empty = true;
            for (Label p = 0; p < n && empty; ++p) {
                if (p == a || p == b || p == x || p == y) continue;
                if (strictly_inside_triangle(o, d0, d1, d2, p) || strictly_inside_triangle(o, d0, d2, d3, p)) empty = false;
            }
            if (!empty) continue;

            FourHole hole;
            hole.convex = reflex < 0;
            if (reflex >= 0) hole.reflex_vertex = v[reflex];
            if (orient > 0) {
                hole.vertices = {a, b, x, y};
                hole.side = Side::Left;
            } else {
                hole.vertices = {b, a, y, x};
                hole.side = Side::Right;
            }
            if (!visit(hole)) return;
        }
    }
}

bool extremal(const OrientationTable& o, Label a, Label b) {
    int side = 0;
    for (Label p = 0; p < o.size(); ++p) {
        if (p == a || p == b) continue;
        const int s = o(a, b, p);
        if (side == 0) side = s;
        else if (s != side) return false;
    }
    return true;
}

}  // namespace

bool is_exit_edge_with_witness(const PointSet& s, Label a, Label b, Label c) {
    check_labels(s, {a, b, c});
    const auto sep = [](const Point& p, const Point& q, const Point& u, const Point& v) {
        return static_cast<int>(orientation(p, q, u)) * static_cast<int>(orientation(p, q, v)) < 0;
    };
    for (Label p = 0; p < s.size(); ++p) {
        if (p == a || p == b || p == c) continue;
        if (sep(s[a], s[p], s[b], s[c]) || sep(s[b], s[p], s[a], s[c])) return false;
    }
    return true;
}

std::vector<ExitEdge> exit_edges_bruteforce(const PointSet& s) {
    if (s.size() < 3) throw Error(ErrorKind::TooFewPoints);
    const OrientationTable o(s);
    const std::size_t n = s.size();
    std::vector<ExitEdge> edges;
    for (Label a = 0; a < n; ++a)
        for (Label b = a + 1; b < n; ++b) {
            ExitEdge e{a, b, {}};
            for (Label c = 0; c < n; ++c) {
                if (c == a || c == b) continue;
                if (witness_holds(o, a, b, c)) e.witnesses.push_back({c, o(a, b, c) > 0 ? Side::Left : Side::Right});
            }
            if (!e.witnesses.empty()) edges.push_back(std::move(e));
        }
    return edges;
}

std::vector<FourHole> four_holes_at_edge(const PointSet& s, Label a, Label b) {
    check_labels(s, {a, b});
    const OrientationTable o(s);
    std::vector<FourHole> holes;
    for_each_hole(o, a, b, [&](const FourHole& h) {
        holes.push_back(h);
        return true;
    });
    return holes;
}

bool is_extremal_edge(const PointSet& s, Label a, Label b) {
    check_labels(s, {a, b});
    return extremal(OrientationTable(s), a, b);
}

std::vector<LabelPair> exit_edges_via_holes(const PointSet& s) {
    if (s.size() < 3) throw Error(ErrorKind::TooFewPoints);
    const OrientationTable o(s);
    const std::size_t n = s.size();
    std::vector<LabelPair> pairs;
    for (Label a = 0; a < n; ++a)
        for (Label b = a + 1; b < n; ++b) {
            bool blocked = false;
            if (extremal(o, a, b)) {
                for_each_hole(o, a, b, [&](const FourHole& h) {
                    blocked = h.convex;
                    return !blocked;
                });
            } else {
                bool left = false, right = false;
                for_each_hole(o, a, b, [&](const FourHole& h) {
                    if (!h.convex && *h.reflex_vertex != a && *h.reflex_vertex != b) return true;
                    (h.side == Side::Left ? left : right) = true;
                    return !(left && right);
                });
                blocked = left && right;
            }
            if (!blocked) pairs.emplace_back(a, b);
        }
    return pairs;
}

std::vector<ExitEdgeDiagnostic> diagnose_exit_edges(const PointSet& s, const std::vector<ExitEdge>& edges) {
    const OrientationTable o(s);
    std::vector<ExitEdgeDiagnostic> out;
    out.reserve(edges.size());
    for (const auto& e : edges) {
        ExitEdgeDiagnostic d{e.a, e.b, !extremal(o, e.a, e.b), false, false, true};
        const bool left = std::any_of(e.witnesses.begin(), e.witnesses.end(), [](const Witness& w) { return w.side == Side::Left; });
        const bool right = std::any_of(e.witnesses.begin(), e.witnesses.end(), [](const Witness& w) { return w.side == Side::Right; });
        d.witnesses_on_both_sides = left && right;
        for_each_hole(o, e.a, e.b, [&](const FourHole&) {
            d.has_four_hole = true;
            return false;
        });
        d.remark_holds = !d.internal || d.witnesses_on_both_sides || d.has_four_hole;
        out.push_back(d);
    }
    return out;
}

std::vector<LabelPair> endpoint_pairs(const std::vector<ExitEdge>& edges) {
    std::vector<LabelPair> out;
    out.reserve(edges.size());
    for (const auto& e : edges) out.emplace_back(e.a, e.b);
    return out;
}

}  // namespace exitgraph
