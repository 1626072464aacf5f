#include "exitgraph/analysis.h"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <tuple>

namespace exitgraph {

namespace {

Rational count(std::size_t v) { return Rational(static_cast<long>(v)); }

}  // namespace

bool StatsReport::all_hold() const {
    return std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.holds; });
}

StatsReport stats_report(const PointSet& s) {
    if (s.size() < 4) throw Error(ErrorKind::TooFewPoints, {}, "stats need at least 4 points");
    return stats_report(s, compute_dual(s));
}

StatsReport stats_report(const PointSet& s, const DualComputation& dual) {
    const std::size_t n = s.size();
    if (n < 4) throw Error(ErrorKind::TooFewPoints, {}, "stats need at least 4 points");

    StatsReport r;
    r.n = n;
    r.T = dual.triangles.size();
    r.T_unmarked = static_cast<std::size_t>(
        std::count_if(dual.triangles.begin(), dual.triangles.end(), [](const TriangularCell& t) { return !t.marked; }));
    r.H = dual.hourglasses.size();
    r.exit_edge_count = dual.edges.size();

    std::vector<std::size_t> t(n, 0), h(n, 0);
    for (const auto& tri : dual.triangles)
        for (Label l : tri.lines) ++t[l];
    for (const auto& hg : dual.hourglasses)
        for (Label l : hg.slicing_lines) ++h[l];

    bool t_at_least_3 = true, h_at_most_half = true;
    std::size_t sum_t = 0, sum_h = 0;
    for (Label i = 0; i < n; ++i) {
        r.per_line.push_back({i, t[i], h[i], count(t[i]) - Rational(static_cast<long>(h[i]), 2)});
        r.sum_x += r.per_line.back().x;
        sum_t += t[i];
        sum_h += h[i];
        t_at_least_3 = t_at_least_3 && t[i] >= 3;
        h_at_most_half = h_at_most_half && 2 * h[i] <= t[i];
    }

    const long nl = static_cast<long>(n);
    r.lower_bound = Rational(3 * nl - 7, 5);
    r.upper_bound = Rational(nl * (nl - 1), 3);
    const Rational e = count(r.exit_edge_count);
    const Rational T = count(r.T), H = count(r.H);

    r.verdicts = {
        {"exit_edges = T_unmarked - H", r.T_unmarked >= r.H && r.exit_edge_count == r.T_unmarked - r.H},
        {"exit_edges >= ceil((3n-7)/5)", e >= Rational(r.lower_bound.ceil())},
        {"exit_edges <= floor(n(n-1)/3)", e <= Rational(r.upper_bound.floor())},
        {"sum t_i = 3T", sum_t == 3 * r.T},
        {"sum h_i = 2H", sum_h == 2 * r.H},
        {"sum x_i = 3T - H", r.sum_x == Rational(3) * T - H},
        {"3T - H >= 3n - 2", Rational(3) * T - H >= Rational(3 * nl - 2)},
        {"T >= 2H", r.T >= 2 * r.H},
        {"T - H >= (3n-2)/5", T - H >= Rational(3 * nl - 2, 5)},
        {"t_i >= 3", t_at_least_3},
        {"h_i <= t_i/2", h_at_most_half},
    };
    return r;
}

bool ArrangementCheck::all_hold() const {
    return vertex_count && edge_count && cell_count && unique_consistent_cell_is_marked && three_triangles_per_line;
}

ArrangementCheck check_arrangement(const DualComputation& dual) {
    const auto& arr = dual.arrangement;
    const std::size_t n = arr.line_count();
    ArrangementCheck c{};
    c.vertex_count = arr.vertex_count() == n * (n - 1) / 2;
    c.edge_count = arr.edge_count() == n * (n - 1);
    c.cell_count = arr.cell_count() == 1 + n * (n - 1) / 2;
    c.unique_consistent_cell_is_marked = consistently_oriented_cells(arr) == std::vector<CellId>{arr.marked_cell()};

    c.three_triangles_per_line = true;
    if (n >= 4) {
        std::vector<std::size_t> t(n, 0);
        for (const auto& tri : dual.triangles)
            for (Label l : tri.lines) ++t[l];
        c.three_triangles_per_line = std::all_of(t.begin(), t.end(), [](std::size_t k) { return k >= 3; });
    }
    return c;
}

std::size_t exit_graph_crossings(const PointSet& s) { return exit_graph_crossings(s, exit_edges_dual(s)); }

std::size_t exit_graph_crossings(const PointSet& s, const std::vector<ExitEdge>& edges) {
    const ScaledOrientation orient(s);
    auto o = [&](Label a, Label b, Label c) { return static_cast<int>(orient(a, b, c)); };
    std::size_t crossings = 0;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const Label a = edges[i].a, b = edges[i].b;
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            const Label c = edges[j].a, d = edges[j].b;
            if (a == c || a == d || b == c || b == d) continue;
            if (o(a, b, c) * o(a, b, d) < 0 && o(c, d, a) * o(c, d, b) < 0) ++crossings;
        }
    }
    return crossings;
}

namespace {

Rational cross(const Point& u, const Point& v) { return u.x * v.y - u.y * v.x; }
Point sub(const Point& p, const Point& q) { return {p.x - q.x, p.y - q.y}; }

/// Plane graph of a set of segments, with every crossing made into a vertex.
/// The first n vertices are the input points; neighbor lists run
/// counterclockwise.
struct SegmentGraph {
    std::vector<Point> pos;
    std::vector<std::vector<std::uint32_t>> around;

    SegmentGraph(const PointSet& s, const std::vector<ExitEdge>& edges) : pos(s.begin(), s.end()), around(s.size()) {
        const ScaledOrientation orient(s);
        auto o = [&](Label a, Label b, Label c) { return static_cast<int>(orient(a, b, c)); };

        std::map<Point, std::uint32_t> crossing_id;
        std::vector<std::vector<std::uint32_t>> on_edge(edges.size());
        for (std::size_t i = 0; i < edges.size(); ++i) {
            const Label a = edges[i].a, b = edges[i].b;
            for (std::size_t j = i + 1; j < edges.size(); ++j) {
                const Label c = edges[j].a, d = edges[j].b;
                if (a == c || a == d || b == c || b == d) continue;
                if (o(a, b, c) * o(a, b, d) >= 0 || o(c, d, a) * o(c, d, b) >= 0) continue;
                // a + u (b - a) with u = cross(c - a, d - c) / cross(b - a, d - c)
                const Point ab = sub(s[b], s[a]), dc = sub(s[d], s[c]);
                const Rational u = cross(sub(s[c], s[a]), dc) / cross(ab, dc);
                const Point x{s[a].x + u * ab.x, s[a].y + u * ab.y};
                auto [it, fresh] = crossing_id.try_emplace(x, static_cast<std::uint32_t>(pos.size()));
                if (fresh) {
                    pos.push_back(x);
                    around.emplace_back();
                }
                on_edge[i].push_back(it->second);
                on_edge[j].push_back(it->second);
            }
        }

        for (std::size_t i = 0; i < edges.size(); ++i) {
            const Point& from = s[edges[i].a];
            const Point dir = sub(s[edges[i].b], from);
            auto& mid = on_edge[i];
            auto along = [&](std::uint32_t v) { const Point d = sub(pos[v], from); return d.x * dir.x + d.y * dir.y; };
            std::sort(mid.begin(), mid.end(), [&](std::uint32_t p, std::uint32_t q) { return along(p) < along(q); });
            mid.erase(std::unique(mid.begin(), mid.end()), mid.end());
            std::uint32_t prev = static_cast<std::uint32_t>(edges[i].a);
            mid.push_back(static_cast<std::uint32_t>(edges[i].b));
            for (std::uint32_t v : mid) {
                around[prev].push_back(v);
                around[v].push_back(prev);
                prev = v;
            }
        }

        for (std::uint32_t v = 0; v < around.size(); ++v) {
            auto& nb = around[v];
            std::sort(nb.begin(), nb.end());
            nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
            auto half = [](const Point& d) { return d.y.sign() > 0 || (d.y.is_zero() && d.x.sign() > 0) ? 0 : 1; };
            std::sort(nb.begin(), nb.end(), [&](std::uint32_t p, std::uint32_t q) {
                const Point dp = sub(pos[p], pos[v]), dq = sub(pos[q], pos[v]);
                const int hp = half(dp), hq = half(dq);
                if (hp != hq) return hp < hq;
                return cross(dp, dq).sign() > 0;
            });
        }
    }
};

/// Winding number of a closed walk around a point not on it.
int winding(const std::vector<Point>& walk, const Point& p) {
    int w = 0;
    for (std::size_t i = 0; i < walk.size(); ++i) {
        const Point& a = walk[i];
        const Point& b = walk[(i + 1) % walk.size()];
        const int side = cross(sub(b, a), sub(p, a)).sign();
        if (a.y <= p.y && p.y < b.y && side > 0) ++w;
        if (b.y <= p.y && p.y < a.y && side < 0) --w;
    }
    return w;
}

}  // namespace

std::vector<Label> outer_face_vertices(const PointSet& s) { return outer_face_vertices(s, exit_edges_dual(s)); }

std::vector<Label> outer_face_vertices(const PointSet& s, const std::vector<ExitEdge>& edges) {
    const SegmentGraph g(s, edges);
    const std::size_t V = g.pos.size();

    // Components by flood fill.
    std::vector<std::uint32_t> comp(V, UINT32_MAX);
    std::uint32_t comps = 0;
    for (std::uint32_t r = 0; r < V; ++r) {
        if (comp[r] != UINT32_MAX) continue;
        std::vector<std::uint32_t> stack{r};
        comp[r] = comps;
        while (!stack.empty()) {
            const auto v = stack.back();
            stack.pop_back();
            for (auto w : g.around[v])
                if (comp[w] == UINT32_MAX) comp[w] = comps, stack.push_back(w);
        }
        ++comps;
    }

    // Outer walk of each component, from its lowest-leftmost vertex.
    std::vector<std::uint32_t> lowest(comps, UINT32_MAX);
    for (std::uint32_t v = 0; v < V; ++v) {
        auto& l = lowest[comp[v]];
        if (l == UINT32_MAX || std::tie(g.pos[v].y, g.pos[v].x) < std::tie(g.pos[l].y, g.pos[l].x)) l = v;
    }
    std::vector<std::vector<std::uint32_t>> outer(comps);
    for (std::uint32_t c = 0; c < comps; ++c) {
        const std::uint32_t start = lowest[c];
        auto& walk = outer[c];
        walk.push_back(start);
        if (g.around[start].empty()) continue;
        // Every neighbor is above, or level and to the right, so the outer
        // face lies right of the edge to the first neighbor.
        const std::uint32_t first = g.around[start].front();
        std::uint32_t u = start, v = first;
        for (;;) {
            const auto& nb = g.around[v];
            const auto k = static_cast<std::size_t>(std::find(nb.begin(), nb.end(), u) - nb.begin());
            const std::uint32_t w = nb[(k + 1) % nb.size()];
            u = v;
            v = w;
            if (u == start && v == first) break;
            walk.push_back(u);
        }
    }

    std::vector<char> enclosed(comps, 0);
    for (std::uint32_t c = 0; c < comps; ++c) {
        const Point& p = g.pos[lowest[c]];
        for (std::uint32_t d = 0; d < comps && !enclosed[c]; ++d) {
            if (d == c || outer[d].size() < 3) continue;
            std::vector<Point> walk;
            for (auto v : outer[d]) walk.push_back(g.pos[v]);
            enclosed[c] = winding(walk, p) != 0;
        }
    }

    std::vector<Label> result;
    for (std::uint32_t c = 0; c < comps; ++c) {
        if (enclosed[c]) continue;
        for (auto v : outer[c])
            if (v < s.size()) result.push_back(v);
    }
    std::sort(result.begin(), result.end());
    result.erase(std::unique(result.begin(), result.end()), result.end());
    return result;
}

namespace {

struct Motion {
    Point start;
    Point delta;
};

QuadraticNumber at(const Rational& base, const Rational& slope, const QuadraticNumber& t) {
    return QuadraticNumber(base) + QuadraticNumber(slope) * t;
}

}  // namespace

std::optional<MorphEvent> first_collinearity_morph(const PointSet& s0, const std::vector<Point>& s1) {
    const std::size_t n = s0.size();
    if (s1.size() != n) throw Error(ErrorKind::SizeMismatch, {}, "morph endpoints differ in size");
    std::vector<Motion> m;
    for (Label i = 0; i < n; ++i) m.push_back({s0[i], sub(s1[i], s0[i])});

    std::optional<MorphEvent> best;
    const QuadraticNumber one(Rational(1));
    for (Label a = 0; a < n; ++a)
        for (Label b = a + 1; b < n; ++b)
            for (Label c = b + 1; c < n; ++c) {
                const Point B0 = sub(m[b].start, m[a].start), C0 = sub(m[c].start, m[a].start);
                const Point dB = sub(m[b].delta, m[a].delta), dC = sub(m[c].delta, m[a].delta);
                const Rational C = cross(B0, C0);
                if (C.is_zero()) throw Error(ErrorKind::ImmediateDegeneracy, {a, b, c});
                const Rational Bc = cross(B0, dC) + cross(dB, C0);
                const Rational A = cross(dB, dC);
                for (const auto& t : real_roots(A, Bc, C)) {
                    if (t.sign() <= 0 || t > one) continue;
                    if (!best || t < best->time) best = MorphEvent{t, {a, b, c}, false, 1};
                    else if (t == best->time) ++best->collinear_triples;
                    break;  // roots ascend
                }
            }
    if (!best) return best;

    const QuadraticNumber& t = best->time;
    const auto [a, b, c] = best->triple;
    auto px = [&](Label i) { return at(m[i].start.x, m[i].delta.x, t); };
    auto py = [&](Label i) { return at(m[i].start.y, m[i].delta.y, t); };
    auto strictly_inside = [&](Label mid, Label u, Label v) {
        const auto ux = px(u), uy = py(u), vx = px(v), vy = py(v), mx = px(mid), my = py(mid);
        const auto d1 = (mx - ux) * (vx - ux) + (my - uy) * (vy - uy);
        const auto d2 = (mx - vx) * (ux - vx) + (my - vy) * (uy - vy);
        return d1.sign() > 0 && d2.sign() > 0;
    };
    for (const auto& [mid, u, v] : {std::array<Label, 3>{c, a, b}, {b, a, c}, {a, b, c}}) {
        if (strictly_inside(mid, u, v)) {
            best->triple = {u, v, mid};
            best->between = true;
            break;
        }
    }
    return best;
}

bool same_order_type_labeled(const PointSet& s, const PointSet& t) {
    const std::size_t n = s.size();
    if (t.size() != n) throw Error(ErrorKind::SizeMismatch, {}, "point sets differ in size");
    const ScaledOrientation os(s), ot(t);
    for (Label i = 0; i < n; ++i)
        for (Label j = i + 1; j < n; ++j)
            for (Label k = j + 1; k < n; ++k)
                if (os(i, j, k) != ot(i, j, k)) return false;
    return true;
}

namespace {

class RelabelingSearch {
public:
    RelabelingSearch(const PointSet& s, const PointSet& t) : n_(s.size()), os_(s), ot_(t), used_(n_, 0) {}

    std::optional<std::vector<Label>> run() {
        if (extend()) return phi_;
        return std::nullopt;
    }

private:
    bool extend() {
        const Label k = phi_.size();
        if (k == n_) return true;
        for (Label cand = 0; cand < n_; ++cand) {
            if (used_[cand]) continue;
            if (!consistent(k, cand)) continue;
            used_[cand] = 1;
            phi_.push_back(cand);
            if (extend()) return true;
            phi_.pop_back();
            used_[cand] = 0;
        }
        return false;
    }

    bool consistent(Label k, Label cand) const {
        for (Label i = 0; i < k; ++i)
            for (Label j = i + 1; j < k; ++j)
                if (os_(i, j, k) != ot_(phi_[i], phi_[j], cand)) return false;
        return true;
    }

    std::size_t n_;
    OrientationTable os_, ot_;
    std::vector<char> used_;
    std::vector<Label> phi_;
};

std::vector<ExitEdge> edges_of(const PointSet& s) {
    if (s.size() < 3) return {};
    return exit_edges_dual(s);
}

ExitEdge relabel(const ExitEdge& e, const std::vector<Label>& phi) {
    Label a = phi[e.a], b = phi[e.b];
    const bool flip = a > b;
    if (flip) std::swap(a, b);
    ExitEdge r{a, b, {}};
    for (const auto& w : e.witnesses)
        r.witnesses.push_back({phi[w.label], flip ? static_cast<Side>(-static_cast<int>(w.side)) : w.side});
    std::sort(r.witnesses.begin(), r.witnesses.end());
    return r;
}

std::vector<ExitEdge> missing_from(const std::vector<ExitEdge>& x, const std::vector<ExitEdge>& y) {
    std::vector<ExitEdge> out;
    for (const auto& e : x)
        if (std::find(y.begin(), y.end(), e) == y.end()) out.push_back(e);
    return out;
}

}  // namespace

std::optional<std::vector<Label>> same_order_type_unlabeled(const PointSet& s, const PointSet& t) {
    if (t.size() != s.size()) throw Error(ErrorKind::SizeMismatch, {}, "point sets differ in size");
    if (s.size() > kMaxUnlabeledSize) throw std::invalid_argument("unlabeled comparison is limited to 8 points");
    return RelabelingSearch(s, t).run();
}

ExitStructureComparison compare_exit_structures(const PointSet& s, const PointSet& t, bool unlabeled) {
    const std::size_t n = s.size();
    if (t.size() != n) throw Error(ErrorKind::SizeMismatch, {}, "point sets differ in size");
    ExitStructureComparison r{};

    const ScaledOrientation os(s), ot(t);
    for (Label i = 0; i < n; ++i)
        for (Label j = i + 1; j < n; ++j)
            for (Label k = j + 1; k < n; ++k)
                if (os(i, j, k) != ot(i, j, k)) r.orientation_mismatches.push_back({i, j, k});

    if (unlabeled) r.relabeling = same_order_type_unlabeled(s, t);
    r.same_order_type = unlabeled ? r.relabeling.has_value() : r.orientation_mismatches.empty();

    std::vector<ExitEdge> first = edges_of(s);
    const std::vector<ExitEdge> second = edges_of(t);
    if (r.relabeling) {
        for (auto& e : first) e = relabel(e, *r.relabeling);
        std::sort(first.begin(), first.end(), [](const ExitEdge& x, const ExitEdge& y) {
            return std::tie(x.a, x.b) < std::tie(y.a, y.b);
        });
    }
    r.only_in_first = missing_from(first, second);
    r.only_in_second = missing_from(second, first);
    r.same_exit_structure = r.only_in_first.empty() && r.only_in_second.empty();
    return r;
}

PointSet random_general_position_set(std::size_t n, std::int64_t side, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::int64_t> coord(0, side);
    for (;;) {
        std::vector<Point> pts;
        pts.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            const auto x = coord(rng);
            pts.push_back({x, coord(rng)});
        }
        auto r = certify_general_position(std::move(pts));
        if (auto* s = std::get_if<PointSet>(&r)) return std::move(*s);
    }
}

namespace {

std::mt19937_64 trial_rng(std::uint64_t seed, std::size_t trial) {
    const auto t = static_cast<std::uint64_t>(trial);
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(t), static_cast<std::uint32_t>(t >> 32)};
    return std::mt19937_64(seq);
}

}  // namespace

SearchResult search_min_exit_edges(std::size_t n, std::size_t trials, std::uint64_t seed, unsigned threads) {
    if (n < 4) throw std::invalid_argument("search needs n >= 4");
    if (trials == 0) throw std::invalid_argument("search needs at least one trial");
    const auto side = static_cast<std::int64_t>(4 * n * n);
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, trials));

    std::atomic<std::size_t> next{0};
    std::vector<std::pair<std::size_t, std::size_t>> best(threads, {SIZE_MAX, SIZE_MAX});  // (count, trial)
    std::vector<std::exception_ptr> failure(threads);
    auto work = [&](unsigned w) {
        try {
            for (std::size_t i; (i = next.fetch_add(1)) < trials;) {
                auto rng = trial_rng(seed, i);
                const auto s = random_general_position_set(n, side, rng);
                best[w] = std::min(best[w], {exit_edges_dual(s).size(), i});
            }
        } catch (...) {
            failure[w] = std::current_exception();
        }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < threads; ++w) pool.emplace_back(work, w);
    work(0);
    for (auto& th : pool) th.join();
    for (auto& f : failure)
        if (f) std::rethrow_exception(f);

    const auto [count, trial] = *std::min_element(best.begin(), best.end());
    auto rng = trial_rng(seed, trial);
    return {random_general_position_set(n, side, rng), count, trial};
}

}  // namespace exitgraph
