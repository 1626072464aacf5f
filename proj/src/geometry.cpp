#include "exitgraph/geometry.h"

#include "integer_frame.h"

#include <algorithm>
#include <numeric>

namespace exitgraph {

Orientation orientation(const Point& p, const Point& q, const Point& r) {
    const mpq_class det = (q.x.value() - p.x.value()) * (r.y.value() - p.y.value()) -
                          (q.y.value() - p.y.value()) * (r.x.value() - p.x.value());
    return static_cast<Orientation>(sgn(det));
}

namespace {

template <class Int, class Wide>
std::optional<GeneralPositionViolation> find_violation(const std::vector<Int>& xs, const std::vector<Int>& ys) {
    const std::size_t n = xs.size();

    std::vector<Label> order(n);
    std::iota(order.begin(), order.end(), Label{0});
    std::stable_sort(order.begin(), order.end(), [&](Label a, Label b) {
        return xs[a] != xs[b] ? xs[a] < xs[b] : ys[a] < ys[b];
    });
    std::optional<std::pair<Label, Label>> dup;
    for (std::size_t s = 0; s < n;) {
        std::size_t e = s + 1;
        while (e < n && xs[order[e]] == xs[order[s]] && ys[order[e]] == ys[order[s]]) ++e;
        if (e - s >= 2) {
            // stable sort keeps labels ascending within a group
            std::pair<Label, Label> cand{order[s], order[s + 1]};
            if (!dup || cand < *dup) dup = cand;
        }
        s = e;
    }
    if (dup) return GeneralPositionViolation{ErrorKind::DuplicatePoint, {dup->first, dup->second}};

    struct Dir {
        Int dx, dy;
        Label label;
    };
    std::vector<Dir> dirs;
    dirs.reserve(n);
    auto cross = [](const Dir& a, const Dir& b) {
        const Wide c = Wide(a.dx) * Wide(b.dy) - Wide(a.dy) * Wide(b.dx);
        return detail::sign_of(c);
    };
    for (Label i = 0; i + 2 < n; ++i) {
        dirs.clear();
        for (Label j = i + 1; j < n; ++j) {
            Int dx = xs[j] - xs[i];
            Int dy = ys[j] - ys[i];
            if (dy < 0 || (dy == 0 && dx < 0)) {
                dx = -dx;
                dy = -dy;
            }
            dirs.push_back({dx, dy, j});
        }
        // Directions normalized to the half-open upper half-plane sort by angle.
        std::sort(dirs.begin(), dirs.end(), [&](const Dir& a, const Dir& b) {
            const int c = cross(a, b);
            return c != 0 ? c > 0 : a.label < b.label;
        });
        std::optional<std::pair<Label, Label>> best;
        for (std::size_t s = 0; s < dirs.size();) {
            std::size_t e = s + 1;
            while (e < dirs.size() && cross(dirs[s], dirs[e]) == 0) ++e;
            if (e - s >= 2) {
                std::pair<Label, Label> cand{dirs[s].label, dirs[s + 1].label};
                if (!best || cand < *best) best = cand;
            }
            s = e;
        }
        if (best) return GeneralPositionViolation{ErrorKind::CollinearTriple, {i, best->first, best->second}};
    }
    return std::nullopt;
}

}  // namespace

std::variant<PointSet, GeneralPositionViolation> certify_general_position(std::vector<Point> points) {
    std::vector<Rational> coords;
    coords.reserve(2 * points.size());
    for (const auto& p : points) coords.push_back(p.x);
    for (const auto& p : points) coords.push_back(p.y);
    const auto frame = detail::make_integer_frame(coords);
    const std::size_t n = points.size();

    std::optional<GeneralPositionViolation> violation;
    if (frame.fits_int64) {
        auto all = frame.as_int64();
        std::vector<std::int64_t> xs(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(n));
        std::vector<std::int64_t> ys(all.begin() + static_cast<std::ptrdiff_t>(n), all.end());
        violation = find_violation<std::int64_t, __int128>(xs, ys);
    } else {
        std::vector<mpz_class> xs(frame.values.begin(), frame.values.begin() + static_cast<std::ptrdiff_t>(n));
        std::vector<mpz_class> ys(frame.values.begin() + static_cast<std::ptrdiff_t>(n), frame.values.end());
        violation = find_violation<mpz_class, mpz_class>(xs, ys);
    }
    if (violation) return *violation;
    return PointSet(std::move(points));
}

PointSet PointSet::certify(std::vector<Point> points) {
    auto result = certify_general_position(std::move(points));
    if (auto* v = std::get_if<GeneralPositionViolation>(&result)) throw Error(v->kind, v->labels);
    return std::get<PointSet>(std::move(result));
}

std::vector<Label> convex_hull(const PointSet& s) {
    const std::size_t n = s.size();
    if (n < 3) throw Error(ErrorKind::TooFewPoints, {}, "convex hull needs at least 3 points");
    std::vector<Label> order(n);
    std::iota(order.begin(), order.end(), Label{0});
    std::sort(order.begin(), order.end(), [&](Label a, Label b) { return s[a] < s[b]; });

    // Andrew's monotone chain; general position means no collinear ties.
    std::vector<Label> hull(2 * n);
    std::size_t k = 0;
    for (Label i : order) {
        while (k >= 2 && orientation(s[hull[k - 2]], s[hull[k - 1]], s[i]) != Orientation::Counterclockwise) --k;
        hull[k++] = i;
    }
    for (std::size_t idx = n - 1, lower = k + 1; idx-- > 0;) {
        const Label i = order[idx];
        while (k >= lower && orientation(s[hull[k - 2]], s[hull[k - 1]], s[i]) != Orientation::Counterclockwise) --k;
        hull[k++] = i;
    }
    hull.resize(k - 1);
    return hull;
}

bool line_separates(const Point& p, const Point& q, const Point& a, const Point& b) {
    if (p == q) throw Error(ErrorKind::DegenerateLine);
    const auto oa = orientation(p, q, a);
    const auto ob = orientation(p, q, b);
    if (oa == Orientation::Collinear || ob == Orientation::Collinear) throw Error(ErrorKind::OnLine);
    return oa != ob;
}

ShearResult shear_to_generic(const PointSet& s) {
    auto sheared = [&](const Rational& lambda) {
        std::vector<Point> pts;
        pts.reserve(s.size());
        for (const auto& p : s) pts.push_back({p.x + lambda * p.y, p.y});
        return pts;
    };
    auto distinct_x = [](const std::vector<Point>& pts) {
        std::vector<const Rational*> xs;
        xs.reserve(pts.size());
        for (const auto& p : pts) xs.push_back(&p.x);
        std::sort(xs.begin(), xs.end(), [](const Rational* a, const Rational* b) { return *a < *b; });
        return std::adjacent_find(xs.begin(), xs.end(), [](const Rational* a, const Rational* b) { return *a == *b; }) == xs.end();
    };

    // 0, 1, -1, 1/2, -1/2, ...; only finitely many values collapse two x's.
    for (long k = 0;; ++k) {
        for (int sign : {1, -1}) {
            if (k == 0 && sign < 0) continue;
            const Rational lambda = k == 0 ? Rational(0) : Rational(sign, k);
            auto pts = sheared(lambda);
            if (distinct_x(pts)) return ShearResult{PointSet(std::move(pts)), lambda};
        }
    }
}

bool segments_cross(const Point& a, const Point& b, const Point& c, const Point& d) {
    if (a == c || a == d || b == c || b == d) throw Error(ErrorKind::SharedEndpoint);
    const int o1 = static_cast<int>(orientation(a, b, c));
    const int o2 = static_cast<int>(orientation(a, b, d));
    const int o3 = static_cast<int>(orientation(c, d, a));
    const int o4 = static_cast<int>(orientation(c, d, b));
    return o1 * o2 < 0 && o3 * o4 < 0;
}

ScaledOrientation::ScaledOrientation(const PointSet& s) : n_(s.size()), small_(false) {
    std::vector<Rational> coords;
    coords.reserve(2 * n_);
    for (const auto& p : s) coords.push_back(p.x);
    for (const auto& p : s) coords.push_back(p.y);
    auto frame = detail::make_integer_frame(coords);
    small_ = frame.fits_int64;
    if (small_) word_ = frame.as_int64();
    else big_ = std::move(frame.values);
}

Orientation ScaledOrientation::operator()(Label a, Label b, Label c) const {
    if (small_) {
        const auto* x = word_.data();
        const auto* y = x + n_;
        const __int128 d = static_cast<__int128>(x[b] - x[a]) * (y[c] - y[a]) - static_cast<__int128>(y[b] - y[a]) * (x[c] - x[a]);
        return static_cast<Orientation>(detail::sign_of(d));
    }
    const auto* x = big_.data();
    const auto* y = x + n_;
    const mpz_class d = (x[b] - x[a]) * (y[c] - y[a]) - (y[b] - y[a]) * (x[c] - x[a]);
    return static_cast<Orientation>(sgn(d));
}

OrientationTable::OrientationTable(const PointSet& s) : n_(s.size()), table_(n_ * n_ * n_, 0) {
    for (Label a = 0; a < n_; ++a)
        for (Label b = a + 1; b < n_; ++b)
            for (Label c = b + 1; c < n_; ++c) {
                const auto o = static_cast<std::int8_t>(orientation(s[a], s[b], s[c]));
                const auto r = static_cast<std::int8_t>(-o);
                table_[(a * n_ + b) * n_ + c] = o;
                table_[(b * n_ + c) * n_ + a] = o;
                table_[(c * n_ + a) * n_ + b] = o;
                table_[(b * n_ + a) * n_ + c] = r;
                table_[(a * n_ + c) * n_ + b] = r;
                table_[(c * n_ + b) * n_ + a] = r;
            }
}

}  // namespace exitgraph
