#include "exitgraph/io.h"

#include "exitgraph/arrangement.h"

#include <json.hpp>

#include <algorithm>
#include <set>
#include <sstream>

namespace exitgraph {

SyntaxError::SyntaxError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

std::vector<Point> parse_point_list(std::string_view text) {
    std::vector<Point> points;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto eol = text.find('\n');
        std::string line(text.substr(0, eol));
        text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);

        std::istringstream in(line);
        std::vector<std::string> tokens;
        for (std::string tok; in >> tok;) tokens.push_back(tok);
        if (tokens.empty()) continue;
        if (tokens.size() != 2)
            throw SyntaxError(line_no, "expected two coordinates, found " + std::to_string(tokens.size()));
        try {
            Rational x = Rational::parse(tokens[0]);
            Rational y = Rational::parse(tokens[1]);
            points.push_back({std::move(x), std::move(y)});
        } catch (const std::invalid_argument& e) {
            throw SyntaxError(line_no, e.what());
        } catch (const std::domain_error& e) {
            throw SyntaxError(line_no, e.what());
        }
    }
    return points;
}

PointSet parse_points(std::string_view text) { return PointSet::certify(parse_point_list(text)); }

std::string serialize_points(std::span<const Point> points) {
    std::string out;
    for (const auto& p : points) out += p.x.to_string() + " " + p.y.to_string() + "\n";
    return out;
}

std::string describe_exit_edges(const std::vector<ExitEdge>& edges) {
    std::string out = std::to_string(edges.size()) + (edges.size() == 1 ? " exit edge" : " exit edges");
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto& e = edges[i];
        out += i == 0 ? ": " : "; ";
        out += "{" + std::to_string(e.a) + "," + std::to_string(e.b) + "}";
        out += e.witnesses.size() == 1 ? " witness {" : " witnesses {";
        for (std::size_t k = 0; k < e.witnesses.size(); ++k) out += (k ? "," : "") + std::to_string(e.witnesses[k].label);
        out += "}";
    }
    return out;
}

std::string report_json(const PointSet& s) {
    using json = nlohmann::ordered_json;
    json doc;
    doc["schema"] = 1;
    doc["n"] = s.size();
    doc["points"] = json::array();
    for (Label i = 0; i < s.size(); ++i)
        doc["points"].push_back({{"label", i}, {"x", s[i].x.to_string()}, {"y", s[i].y.to_string()}});

    std::optional<DualComputation> dual;
    if (s.size() >= 3) dual = compute_dual(s);
    doc["exit_edges"] = json::array();
    if (dual) {
        for (const auto& e : dual->edges) {
            json w = json::array();
            for (const auto& x : e.witnesses) w.push_back({{"label", x.label}, {"side", x.side == Side::Left ? "left" : "right"}});
            doc["exit_edges"].push_back({{"a", e.a}, {"b", e.b}, {"witnesses", w}});
        }
    }
    doc["exit_edge_count"] = dual ? dual->edges.size() : 0;

    doc["stats"] = nullptr;
    doc["verdicts"] = json::array();
    if (s.size() >= 4) {
        const auto r = stats_report(s, *dual);
        json per_line = json::array();
        for (const auto& l : r.per_line) per_line.push_back({{"source", l.source}, {"t", l.t}, {"h", l.h}, {"x", l.x.to_string()}});
        doc["stats"] = {{"T", r.T},
                        {"T_unmarked", r.T_unmarked},
                        {"H", r.H},
                        {"lower_bound", r.lower_bound.to_string()},
                        {"upper_bound", r.upper_bound.to_string()},
                        {"sum_x", r.sum_x.to_string()},
                        {"per_line", per_line}};
        for (const auto& v : r.verdicts) doc["verdicts"].push_back({{"name", v.name}, {"holds", v.holds}});
    }
    return doc.dump(2) + "\n";
}

namespace {

constexpr int kDigits = 20;

std::string num(const Rational& r) { return r.to_decimal(kDigits); }

/// Data coordinates with y pointing up, written into a y-down SVG user space.
class Canvas {
public:
    Canvas(Rational x0, Rational y0, Rational x1, Rational y1) {
        Rational w = x1 - x0, h = y1 - y0;
        if (w.is_zero()) w = h.is_zero() ? Rational(1) : h;
        if (h.is_zero()) h = w;
        const Rational cx = (x0 + x1) / Rational(2), cy = (y0 + y1) / Rational(2);
        const Rational half_w = w / Rational(2), half_h = h / Rational(2);
        x0_ = cx - half_w - w / Rational(10);
        x1_ = cx + half_w + w / Rational(10);
        y0_ = cy - half_h - h / Rational(10);
        y1_ = cy + half_h + h / Rational(10);
        unit_ = std::max(x1_ - x0_, y1_ - y0_) / Rational(100);
    }

    const Rational& x0() const { return x0_; }
    const Rational& x1() const { return x1_; }
    const Rational& y0() const { return y0_; }
    const Rational& y1() const { return y1_; }
    const Rational& unit() const { return unit_; }

    std::string x(const Rational& v) const { return num(v); }
    std::string y(const Rational& v) const { return num(-v); }

    std::string header(const std::string& description) const {
        const Rational w = x1_ - x0_, h = y1_ - y0_;
        std::string s = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
        s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\"" +
             num(Rational(800) * h / w) + "\" viewBox=\"" + num(x0_) + " " + num(-y1_) + " " + num(w) + " " + num(h) + "\">\n";
        s += "<desc>" + description + "</desc>\n";
        s += "<rect class=\"background\" x=\"" + num(x0_) + "\" y=\"" + num(-y1_) + "\" width=\"" + num(w) + "\" height=\"" +
             num(h) + "\" fill=\"white\"/>\n";
        return s;
    }

private:
    Rational x0_, y0_, x1_, y1_, unit_;
};

std::string disk(const Canvas& c, const std::string& cls, const Rational& x, const Rational& y, const std::string& fill) {
    return "<circle class=\"" + cls + "\" cx=\"" + c.x(x) + "\" cy=\"" + c.y(y) + "\" r=\"" + num(c.unit() * Rational(4, 5)) +
           "\" fill=\"" + fill + "\" stroke=\"black\" stroke-width=\"" + num(c.unit() / Rational(5)) + "\"/>\n";
}

std::string label(const Canvas& c, const Rational& x, const Rational& y, const std::string& text) {
    // Above the anchor, or below it in the top half of the picture.
    const Rational dy = y + y > c.y0() + c.y1() ? c.unit() * Rational(-4) : c.unit();
    return "<text class=\"label\" x=\"" + c.x(x + c.unit()) + "\" y=\"" + c.y(y + dy) + "\" font-size=\"" +
           num(c.unit() * Rational(3)) + "\" font-family=\"sans-serif\">" + text + "</text>\n";
}

std::string render_primal(const PointSet& s) {
    const std::size_t n = s.size();
    Rational x0, y0, x1, y1;
    for (Label i = 0; i < n; ++i) {
        if (i == 0 || s[i].x < x0) x0 = s[i].x;
        if (i == 0 || s[i].x > x1) x1 = s[i].x;
        if (i == 0 || s[i].y < y0) y0 = s[i].y;
        if (i == 0 || s[i].y > y1) y1 = s[i].y;
    }
    const Canvas c(x0, y0, x1, y1);
    std::string svg = c.header("exit graph of " + std::to_string(n) + " points");

    if (n >= 3) {
        std::string pts;
        for (Label i : convex_hull(s)) pts += (pts.empty() ? "" : " ") + c.x(s[i].x) + "," + c.y(s[i].y);
        svg += "<polygon class=\"hull\" points=\"" + pts + "\" fill=\"none\" stroke=\"#808080\" stroke-width=\"" + num(c.unit() / Rational(4)) +
               "\" stroke-dasharray=\"" + num(c.unit() * Rational(2)) + " " + num(c.unit() * Rational(3, 2)) + "\"/>\n";
        for (const auto& e : exit_edges_dual(s))
            svg += "<line class=\"exit-edge\" x1=\"" + c.x(s[e.a].x) + "\" y1=\"" + c.y(s[e.a].y) + "\" x2=\"" + c.x(s[e.b].x) +
                   "\" y2=\"" + c.y(s[e.b].y) + "\" stroke=\"black\" stroke-width=\"" + num(c.unit() / Rational(2)) + "\"/>\n";
    }
    for (Label i = 0; i < n; ++i) svg += disk(c, "point", s[i].x, s[i].y, "white");
    for (Label i = 0; i < n; ++i) svg += label(c, s[i].x, s[i].y, std::to_string(i));
    return svg + "</svg>\n";
}

using Polygon = std::vector<RationalPoint>;

Polygon clip(const Polygon& poly, const DualLine& line, bool above) {
    auto f = [&](const RationalPoint& p) {
        const Rational v = p.y - line.slope * p.x - line.intercept;
        return above ? v : -v;
    };
    Polygon out;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const auto& p = poly[i];
        const auto& q = poly[(i + 1) % poly.size()];
        const Rational fp = f(p), fq = f(q);
        if (fp.sign() >= 0) out.push_back(p);
        if ((fp.sign() > 0 && fq.sign() < 0) || (fp.sign() < 0 && fq.sign() > 0)) {
            const Rational t = fp / (fp - fq);
            out.push_back({p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)});
        }
    }
    return out;
}

std::string render_dual(const PointSet& s) {
    const auto dual = compute_dual(s);
    const auto& arr = dual.arrangement;
    const auto [lo, hi] = arr.bounding_box();
    const Canvas c(lo.x, lo.y, hi.x, hi.y);

    std::string desc = "dual arrangement of " + std::to_string(s.size()) + " lines";
    if (!dual.shear.lambda.is_zero()) desc += ", points sheared by x + (" + dual.shear.lambda.to_string() + ")y first";
    std::string svg = c.header(desc);

    const Polygon box{{c.x0(), c.y0()}, {c.x1(), c.y0()}, {c.x1(), c.y1()}, {c.x0(), c.y1()}};
    std::set<VertexId> exit_vertices;
    for (const auto& tri : dual.triangles) {
        if (tri.marked) continue;
        exit_vertices.insert(*tri.exit_vertex);
        std::string d;
        for (const auto& part : arr.euclidean_parts(tri.cell)) {
            Polygon poly = box;
            for (const auto& hp : part) poly = clip(poly, arr.line(hp.line), hp.above);
            if (poly.size() < 3) continue;
            for (std::size_t i = 0; i < poly.size(); ++i)
                d += (i == 0 ? (d.empty() ? "M" : " M") : " L") + c.x(poly[i].x) + " " + c.y(poly[i].y);
            d += " Z";
        }
        svg += "<path class=\"triangle\" d=\"" + d + "\" fill=\"#d0d0d0\" stroke=\"none\"/>\n";
    }

    for (const auto& line : arr.lines()) {
        // Part of y = m x + c inside the box.
        Rational xa = c.x0(), xb = c.x1();
        if (!line.slope.is_zero()) {
            Rational u = (c.y0() - line.intercept) / line.slope, v = (c.y1() - line.intercept) / line.slope;
            if (v < u) std::swap(u, v);
            xa = std::max(xa, u);
            xb = std::min(xb, v);
        } else if (line.intercept < c.y0() || line.intercept > c.y1()) {
            continue;
        }
        if (xb <= xa) continue;
        const Rational ya = line.slope * xa + line.intercept, yb = line.slope * xb + line.intercept;
        svg += "<line class=\"dual-line\" x1=\"" + c.x(xa) + "\" y1=\"" + c.y(ya) + "\" x2=\"" + c.x(xb) + "\" y2=\"" + c.y(yb) +
               "\" stroke=\"black\" stroke-width=\"" + num(c.unit() / Rational(4)) + "\"/>\n";
        const Rational xl = xa + (xb - xa) * Rational(static_cast<long>(1 + line.source % 6), 16);
        svg += label(c, xl, line.slope * xl + line.intercept, std::to_string(line.source));
    }
    for (VertexId v : exit_vertices) {
        const auto p = arr.position(v);
        svg += disk(c, "exit-vertex", p.x, p.y, "black");
    }
    return svg + "</svg>\n";
}

}  // namespace

std::string render_svg(const PointSet& s, RenderMode mode) {
    return mode == RenderMode::Primal ? render_primal(s) : render_dual(s);
}

}  // namespace exitgraph
