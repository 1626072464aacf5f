#include "exitgraph/arrangement.h"

#include "integer_frame.h"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

namespace exitgraph {

namespace {

constexpr std::uint32_t kNone = 0x7fffffffu;
constexpr std::uint32_t kThroughBit = 1u << 30;
constexpr std::uint32_t kForwardBit = 1u << 31;
constexpr std::uint32_t kRankMask = kThroughBit - 1;

template <class Int, class Wide>
struct LineKernel {
    std::vector<Int> slope;      // by rank, strictly increasing
    std::vector<Int> intercept;  // by rank

    struct X {
        Int num;
        Int den;  // > 0
    };

    X crossing(std::uint32_t i, std::uint32_t j) const {
        if (i > j) std::swap(i, j);
        return X{Int(intercept[i] - intercept[j]), Int(slope[j] - slope[i])};
    }

    static int compare(const X& a, const X& b) {
        const Wide l = Wide(a.num) * Wide(b.den);
        const Wide r = Wide(b.num) * Wide(a.den);
        return detail::sign_of(Wide(l - r));
    }
};

struct RawEntry {
    std::uint32_t vertex;
    std::uint32_t line;
    int dir;
};

/// Edge piece of an open face's chain: it leaves `vertex` rightward along
/// `line`. `vertex == kNone` stands for the far left.
struct ChainLink {
    std::uint32_t vertex;
    std::uint32_t line;
};

struct OpenFace {
    std::vector<ChainLink> lower;
    std::vector<ChainLink> upper;
};

struct SweepOutput {
    std::vector<std::array<std::uint32_t, 2>> vertex_lines;
    std::vector<std::uint32_t> entry_vertex;
    std::vector<std::uint32_t> entry_line;
    std::vector<std::uint32_t> cell_offset;
    std::vector<std::uint32_t> cell_split;
    std::vector<std::vector<RawEntry>> unbounded;  // by gap
};

std::uint32_t pack(std::uint32_t rank, bool through, bool forward);

/// Topological sweep with upper and lower horizon trees. The cut holds one
/// edge per line, top to bottom; upper_[l] is the line that l's upper
/// horizon tree edge ends on, lower_[l] likewise below. Adjacent cut lines
/// that end on each other meet at the next vertex to sweep.
template <class Int, class Wide>
class Sweep {
public:
    using Kernel = LineKernel<Int, Wide>;

    Sweep(const Kernel& kernel, const std::vector<DualLine>& lines, SweepOutput& out)
        : kernel_(kernel), lines_(lines), out_(out), n_(static_cast<std::uint32_t>(lines.size())) {}

    void run() {
        const std::uint32_t n = n_;
        const std::size_t total = std::size_t{n} * (n - 1) / 2;
        cut_.resize(n);
        std::iota(cut_.begin(), cut_.end(), 0u);
        upper_.assign(n, kNone);
        lower_.assign(n, kNone);
        for (std::uint32_t p = 1; p < n; ++p) upper_[p] = walk_up(p, p - 1);
        for (std::uint32_t p = n - 1; p > 0; --p) lower_[p - 1] = walk_down(p - 1, p);

        last_other_.assign(n, kNone);
        fill_.assign(n, 0);
        out_.vertex_lines.reserve(total);
        out_.entry_vertex.reserve(4 * total + 2 * n);
        out_.entry_line.reserve(4 * total + 2 * n);
        out_.cell_offset.reserve(total + 2);
        out_.cell_split.reserve(total + 1);
        out_.cell_offset.push_back(0);
        out_.unbounded.assign(2 * std::size_t{n}, {});

        // Slot s is the face between cut lines s-1 and s; 0 and n are the top
        // and bottom faces.
        faces_.assign(n + 1, {});
        faces_[0].lower.push_back({kNone, 0});
        for (std::uint32_t s = 1; s < n; ++s) {
            faces_[s].lower.push_back({kNone, s});
            faces_[s].upper.push_back({kNone, s - 1});
        }
        faces_[n].upper.push_back({kNone, n - 1});

        std::vector<std::uint32_t> ready_stack;
        for (std::uint32_t p = 0; p + 1 < n; ++p)
            if (ready(p)) ready_stack.push_back(p);
        while (!ready_stack.empty()) {
            const std::uint32_t p = ready_stack.back();
            ready_stack.pop_back();
            const std::uint32_t a = cut_[p], b = cut_[p + 1];
            const auto v = static_cast<std::uint32_t>(out_.vertex_lines.size());
            out_.vertex_lines.push_back({a, b});
            append(a, b);
            append(b, a);

            faces_[p].lower.push_back({v, b});
            faces_[p + 2].upper.push_back({v, a});
            close(faces_[p + 1], v);
            faces_[p + 1].lower.assign(1, {v, a});
            faces_[p + 1].upper.assign(1, {v, b});

            cut_[p] = b;
            cut_[p + 1] = a;
            upper_[b] = walk_up(b, p > 0 ? cut_[p - 1] : kNone);
            lower_[a] = walk_down(a, p + 2 < n ? cut_[p + 2] : kNone);
            if (p > 0 && ready(p - 1)) ready_stack.push_back(p - 1);
            if (p + 2 < n && ready(p + 1)) ready_stack.push_back(p + 1);
        }
        if (out_.vertex_lines.size() != total) throw stalled();

        for (auto& f : faces_) {
            buffer_.clear();
            for (std::size_t k = f.upper.size(); k-- > 1;) buffer_.push_back({f.upper[k].vertex, f.upper[k - 1].line, -1});
            for (const auto& c : f.lower) {
                if (c.vertex != kNone) buffer_.push_back({c.vertex, c.line, +1});
            }
            const auto gap = f.lower.empty() ? n + f.upper.front().line : f.lower.back().line;
            out_.unbounded[gap] = buffer_;
        }
    }

private:
    bool ready(std::uint32_t p) const { return upper_[cut_[p + 1]] == cut_[p] && lower_[cut_[p]] == cut_[p + 1]; }

    /// Where line b, below the cut line j, first meets the upper horizon
    /// tree when extended rightward.
    std::uint32_t walk_up(std::uint32_t b, std::uint32_t j) const {
        while (j != kNone) {
            // Only a steeper line below j can reach it on the right.
            if (b > j) {
                if (upper_[j] == kNone) return j;
                const int c = Kernel::compare(kernel_.crossing(b, j), kernel_.crossing(j, upper_[j]));
                if (c == 0) throw concurrent(b, j, upper_[j]);
                if (c < 0) return j;
            }
            j = upper_[j];
        }
        return kNone;
    }

    std::uint32_t walk_down(std::uint32_t a, std::uint32_t j) const {
        while (j != kNone) {
            if (a < j) {
                if (lower_[j] == kNone) return j;
                const int c = Kernel::compare(kernel_.crossing(a, j), kernel_.crossing(j, lower_[j]));
                if (c == 0) throw concurrent(a, j, lower_[j]);
                if (c < 0) return j;
            }
            j = lower_[j];
        }
        return kNone;
    }

    void append(std::uint32_t line, std::uint32_t other) {
        const std::uint32_t prev = last_other_[line];
        if (prev != kNone) {
            const int c = Kernel::compare(kernel_.crossing(line, prev), kernel_.crossing(line, other));
            if (c == 0) throw concurrent(line, prev, other);
            if (c > 0) throw std::logic_error("sweep produced vertices out of order");
        }
        if (++fill_[line] == n_) throw std::logic_error("sweep produced too many vertices");
        last_other_[line] = other;
    }

    /// Emits the face between the two lines meeting at v, which is its
    /// rightmost vertex. Walked counterclockwise: the lower chain rightward,
    /// then the upper chain back.
    void close(const OpenFace& f, std::uint32_t v) {
        buffer_.clear();
        for (const auto& c : f.lower)
            if (c.vertex != kNone) buffer_.push_back({c.vertex, c.line, +1});
        buffer_.push_back({v, f.upper.back().line, -1});
        for (std::size_t k = f.upper.size(); k-- > 1;) buffer_.push_back({f.upper[k].vertex, f.upper[k - 1].line, -1});
        if (f.lower.front().vertex == kNone) {
            out_.unbounded[n_ + f.upper.front().line] = buffer_;
            return;
        }
        for (const auto& e : buffer_) {
            out_.entry_vertex.push_back(e.vertex);
            out_.entry_line.push_back(pack(e.line, false, e.dir > 0));
        }
        out_.cell_offset.push_back(static_cast<std::uint32_t>(out_.entry_vertex.size()));
        out_.cell_split.push_back(0);
    }

    Error concurrent(std::uint32_t a, std::uint32_t b, std::uint32_t c) const {
        std::vector<Label> labels{lines_[a].source, lines_[b].source, lines_[c].source};
        std::sort(labels.begin(), labels.end());
        return Error(ErrorKind::ConcurrentLines, labels);
    }

    /// The sweep only stalls on concurrent lines; find three of them.
    Error stalled() const {
        std::vector<std::uint32_t> others;
        for (std::uint32_t i = 0; i < n_; ++i) {
            others.clear();
            for (std::uint32_t j = 0; j < n_; ++j)
                if (j != i) others.push_back(j);
            std::sort(others.begin(), others.end(), [&](std::uint32_t x, std::uint32_t y) {
                return Kernel::compare(kernel_.crossing(i, x), kernel_.crossing(i, y)) < 0;
            });
            for (std::size_t k = 1; k < others.size(); ++k)
                if (Kernel::compare(kernel_.crossing(i, others[k - 1]), kernel_.crossing(i, others[k])) == 0)
                    return concurrent(i, others[k - 1], others[k]);
        }
        throw std::logic_error("sweep stalled");
    }

    const Kernel& kernel_;
    const std::vector<DualLine>& lines_;
    SweepOutput& out_;
    const std::uint32_t n_;
    std::vector<std::uint32_t> cut_;
    std::vector<std::uint32_t> upper_;
    std::vector<std::uint32_t> lower_;
    std::vector<std::uint32_t> last_other_;
    std::vector<std::uint32_t> fill_;
    std::vector<OpenFace> faces_;
    std::vector<RawEntry> buffer_;
};

/// Row r lists the vertices on line r. Ids follow the sweep order, which is
/// x order along every line, so a stable scatter by line suffices. It runs
/// in two rounds to keep the number of open write streams small.
std::vector<std::uint32_t> line_rows(const std::vector<std::array<std::uint32_t, 2>>& vertex_lines, std::size_t n) {
    const std::size_t row = n - 1;
    std::size_t shift = 0;
    while ((n - 1) >> shift >= 64) ++shift;
    const std::size_t groups = ((n - 1) >> shift) + 1;
    std::vector<std::size_t> start(groups + 1, 0);
    for (const auto& l : vertex_lines) {
        ++start[(l[0] >> shift) + 1];
        ++start[(l[1] >> shift) + 1];
    }
    std::partial_sum(start.begin(), start.end(), start.begin());
    std::vector<std::uint64_t> staged(2 * vertex_lines.size());
    {
        auto next = start;
        for (std::uint32_t v = 0; v < vertex_lines.size(); ++v)
            for (auto l : vertex_lines[v]) staged[next[l >> shift]++] = std::uint64_t{l} << 32 | v;
    }
    std::vector<std::uint32_t> rows(n * row);
    std::vector<std::size_t> fill(n);
    for (std::size_t l = 0; l < n; ++l) fill[l] = l * row;
    for (const auto e : staged) rows[fill[e >> 32]++] = static_cast<std::uint32_t>(e);
    return rows;
}

template <class Int, class Wide>
void run_sweep(const std::vector<DualLine>& lines, const detail::IntegerFrame& frame, SweepOutput& out) {
    const std::size_t n = lines.size();
    LineKernel<Int, Wide> kernel;
    if constexpr (std::is_same_v<Int, mpz_class>) {
        kernel.slope.assign(frame.values.begin(), frame.values.begin() + static_cast<std::ptrdiff_t>(n));
        kernel.intercept.assign(frame.values.begin() + static_cast<std::ptrdiff_t>(n), frame.values.end());
    } else {
        const auto v = frame.as_int64();
        kernel.slope.assign(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(n));
        kernel.intercept.assign(v.begin() + static_cast<std::ptrdiff_t>(n), v.end());
    }
    Sweep<Int, Wide>(kernel, lines, out).run();
}

std::uint32_t pack(std::uint32_t rank, bool through, bool forward) {
    return rank | (through ? kThroughBit : 0u) | (forward ? kForwardBit : 0u);
}

int side_of(const DualLine& l, const RationalPoint& p) {
    return (p.y - l.slope * p.x - l.intercept).sign();
}

RationalPoint centroid(const std::vector<RationalPoint>& pts) {
    Rational sx, sy;
    for (const auto& p : pts) {
        sx += p.x;
        sy += p.y;
    }
    const Rational k(static_cast<long>(pts.size()));
    return {sx / k, sy / k};
}

/// Sutherland-Hodgman step keeping the closed side `above` of the line.
std::vector<RationalPoint> clip(const std::vector<RationalPoint>& poly, const DualLine& l, bool above) {
    std::vector<RationalPoint> out;
    const std::size_t m = poly.size();
    auto f = [&](const RationalPoint& p) {
        Rational v = p.y - l.slope * p.x - l.intercept;
        return above ? v : -v;
    };
    for (std::size_t i = 0; i < m; ++i) {
        const auto& p = poly[i];
        const auto& q = poly[(i + 1) % m];
        const Rational fp = f(p), fq = f(q);
        if (fp.sign() >= 0) out.push_back(p);
        if ((fp.sign() > 0 && fq.sign() < 0) || (fp.sign() < 0 && fq.sign() > 0)) {
            const Rational t = fp / (fp - fq);
            out.push_back({p.x + (q.x - p.x) * t, p.y + (q.y - p.y) * t});
        }
    }
    return out;
}

/// Scatters into at most 64 groups by the high bits, then sorts each group
/// while it is hot.
void grouped_sort(std::vector<std::uint64_t>& v) {
    if (v.empty()) return;
    const auto top = *std::max_element(v.begin(), v.end());
    unsigned shift = 0;
    while (top >> shift >= 64) ++shift;
    const std::size_t groups = static_cast<std::size_t>(top >> shift) + 1;
    std::vector<std::size_t> start(groups + 1, 0);
    for (auto x : v) ++start[(x >> shift) + 1];
    std::partial_sum(start.begin(), start.end(), start.begin());
    std::vector<std::uint64_t> out(v.size());
    {
        auto next = start;
        for (auto x : v) out[next[x >> shift]++] = x;
    }
    for (std::size_t g = 0; g < groups; ++g)
        std::sort(out.begin() + static_cast<std::ptrdiff_t>(start[g]), out.begin() + static_cast<std::ptrdiff_t>(start[g + 1]));
    v.swap(out);
}

}  // namespace

bool ProjectiveCell::consistently_oriented() const {
    return std::all_of(boundary.begin(), boundary.end(), [&](const BoundaryEntry& e) { return e.forward == boundary.front().forward; });
}

std::vector<DualLine> dualize(const PointSet& s) {
    std::vector<Label> order(s.size());
    std::iota(order.begin(), order.end(), Label{0});
    std::sort(order.begin(), order.end(), [&](Label a, Label b) { return s[a].x < s[b].x; });
    for (std::size_t i = 1; i < order.size(); ++i)
        if (s[order[i]].x == s[order[i - 1]].x)
            throw Error(ErrorKind::NonDistinctSlopes, {std::min(order[i - 1], order[i]), std::max(order[i - 1], order[i])});
    std::vector<DualLine> lines;
    lines.reserve(s.size());
    for (Label i = 0; i < s.size(); ++i) lines.push_back({s[i].x, -s[i].y, i});
    return lines;
}

ProjectiveArrangement build_arrangement(std::vector<DualLine> lines) {
    const std::size_t n = lines.size();
    if (n < 2) throw Error(ErrorKind::TooFewPoints, {}, "an arrangement needs at least two lines");
    if (n * (n - 1) / 2 >= kNone) throw std::length_error("too many lines");
    std::stable_sort(lines.begin(), lines.end(), [](const DualLine& a, const DualLine& b) { return a.slope < b.slope; });
    for (std::size_t i = 1; i < n; ++i)
        if (lines[i].slope == lines[i - 1].slope)
            throw Error(ErrorKind::NonDistinctSlopes, {std::min(lines[i - 1].source, lines[i].source), std::max(lines[i - 1].source, lines[i].source)});

    ProjectiveArrangement arr;
    Label max_source = 0;
    for (const auto& l : lines) max_source = std::max(max_source, l.source);
    arr.rank_of_source_.assign(max_source + 1, kNone);
    for (std::uint32_t r = 0; r < n; ++r) {
        if (arr.rank_of_source_[lines[r].source] != kNone) throw Error(ErrorKind::NonDistinctLabels, {lines[r].source});
        arr.rank_of_source_[lines[r].source] = r;
    }

    std::vector<Rational> values;
    values.reserve(2 * n);
    for (const auto& l : lines) values.push_back(l.slope);
    for (const auto& l : lines) values.push_back(l.intercept);
    const auto frame = detail::make_integer_frame(values);

    SweepOutput out;
    if (frame.fits_int64) run_sweep<std::int64_t, __int128>(lines, frame, out);
    else run_sweep<mpz_class, mpz_class>(lines, frame, out);
    arr.entry_vertex_ = std::move(out.entry_vertex);
    arr.entry_line_ = std::move(out.entry_line);
    arr.cell_offset_ = std::move(out.cell_offset);
    arr.cell_split_ = std::move(out.cell_split);
    const auto line_count = static_cast<std::uint32_t>(n);
    const auto& unbounded = out.unbounded;
    [[maybe_unused]] const std::size_t row = n - 1;

    arr.vertex_lines_ = std::move(out.vertex_lines);
    arr.line_vertices_ = line_rows(arr.vertex_lines_, n);

    // Glue each unbounded face to its antipodal partner. For gap g the face
    // leaves through the ray of line a and comes back on line b; the partner
    // at gap g+n uses the opposite rays of the same two lines.
    for (std::uint32_t g = 0; g < line_count; ++g) {
        const auto& near = unbounded[g];
        const auto& far = unbounded[g + line_count];
        assert(!near.empty() && !far.empty());
        const std::uint32_t a = near.back().line;
        const int dir_a = near.back().dir;
        const std::uint32_t b = a + 1 < line_count ? a + 1 : 0;
        const int dir_in = a + 1 < line_count ? -dir_a : dir_a;
        assert(far.back().line == a && far.back().dir == -dir_a);
        assert(near.front().vertex == arr.line_vertices_[b * row + (dir_in > 0 ? 0 : row - 1)]);

        for (std::size_t i = 0; i + 1 < near.size(); ++i) {
            arr.entry_vertex_.push_back(near[i].vertex);
            arr.entry_line_.push_back(pack(near[i].line, false, near[i].dir > 0));
        }
        arr.entry_vertex_.push_back(near.back().vertex);
        arr.entry_line_.push_back(pack(a, true, dir_a > 0));
        for (std::size_t i = far.size() - 1; i >= 1; --i) {
            arr.entry_vertex_.push_back(far[i].vertex);
            arr.entry_line_.push_back(pack(far[i - 1].line, false, far[i - 1].dir < 0));
        }
        arr.entry_vertex_.push_back(far.front().vertex);
        arr.entry_line_.push_back(pack(b, true, dir_in > 0));

        if (g == line_count - 1) arr.marked_ = static_cast<CellId>(arr.cell_offset_.size() - 1);
        arr.cell_offset_.push_back(static_cast<std::uint32_t>(arr.entry_vertex_.size()));
        arr.cell_split_.push_back(static_cast<std::uint32_t>(near.size()));
    }

    arr.lines_ = std::move(lines);

#ifndef NDEBUG
    {
        const auto consistent = consistently_oriented_cells(arr);
        assert(consistent.size() == 1 && consistent.front() == arr.marked_);
    }
#endif
    return arr;
}

std::uint32_t ProjectiveArrangement::rank(Label source) const {
    if (source >= rank_of_source_.size() || rank_of_source_[source] == kNone) throw Error(ErrorKind::LabelOutOfRange, {source});
    return rank_of_source_[source];
}

std::uint32_t ProjectiveArrangement::other_line(VertexId v, std::uint32_t r) const {
    return vertex_lines_[v][0] == r ? vertex_lines_[v][1] : vertex_lines_[v][0];
}

std::size_t ProjectiveArrangement::edge_count() const {
    // A projective line is cut into as many edges as it has vertices.
    return line_vertices_.size();
}

ArrangementVertex ProjectiveArrangement::vertex(VertexId v) const {
    const auto& r = vertex_lines_[v];
    Label a = lines_[r[0]].source;
    Label b = lines_[r[1]].source;
    if (a > b) std::swap(a, b);
    return {{a, b}};
}

RationalPoint ProjectiveArrangement::position(VertexId v) const {
    const auto& r = vertex_lines_[v];
    const auto& p = lines_[r[0]];
    const auto& q = lines_[r[1]];
    const Rational x = (q.intercept - p.intercept) / (p.slope - q.slope);
    return {x, p.slope * x + p.intercept};
}

std::optional<VertexId> ProjectiveArrangement::vertex_at(Label a, Label b) const {
    const auto ra = rank(a), rb = rank(b);
    if (ra == rb) return std::nullopt;
    const std::size_t row = lines_.size() - 1;
    for (std::size_t i = ra * row; i < (ra + 1) * row; ++i)
        if (other_line(line_vertices_[i], ra) == rb) return line_vertices_[i];
    return std::nullopt;
}

std::vector<VertexId> ProjectiveArrangement::vertices() const {
    std::vector<VertexId> ids(vertex_lines_.size());
    std::iota(ids.begin(), ids.end(), VertexId{0});
    std::vector<ArrangementVertex> keys(vertex_lines_.size());
    for (VertexId v = 0; v < vertex_lines_.size(); ++v) keys[v] = vertex(v);
    std::sort(ids.begin(), ids.end(), [&](VertexId x, VertexId y) { return keys[x].lines < keys[y].lines; });
    return ids;
}

std::vector<VertexId> ProjectiveArrangement::vertices_on_line(Label source) const {
    const std::size_t r = rank(source);
    const std::size_t row = lines_.size() - 1;
    return std::vector<VertexId>(line_vertices_.begin() + static_cast<std::ptrdiff_t>(r * row),
                                 line_vertices_.begin() + static_cast<std::ptrdiff_t>((r + 1) * row));
}

BoundaryEntry ProjectiveArrangement::boundary_entry(CellId id, std::size_t i) const {
    const auto k = cell_offset_[id] + i;
    const auto packed = entry_line_[k];
    return {entry_vertex_[k], lines_[packed & kRankMask].source, (packed & kThroughBit) != 0, (packed & kForwardBit) != 0};
}

ProjectiveCell ProjectiveArrangement::cell(CellId id) const {
    ProjectiveCell c{id, {}, id == marked_};
    c.boundary.reserve(side_count(id));
    for (auto i = cell_offset_[id]; i < cell_offset_[id + 1]; ++i) {
        const auto packed = entry_line_[i];
        c.boundary.push_back({entry_vertex_[i], lines_[packed & kRankMask].source, (packed & kThroughBit) != 0,
                              (packed & kForwardBit) != 0});
    }
    return c;
}

std::vector<std::vector<HalfPlane>> ProjectiveArrangement::euclidean_parts(CellId id) const {
    const auto c = cell(id);
    const std::size_t m = c.boundary.size();
    if (cell_split_[id] == 0) {
        std::vector<HalfPlane> part;
        for (const auto& e : c.boundary) part.push_back({e.line, e.forward});
        return {part};
    }
    // Leading entries plus the closing infinity edge bound the first face;
    // the partner face lies on the opposite side of the same lines.
    const std::size_t split = cell_split_[id];
    std::vector<HalfPlane> first, second;
    for (std::size_t i = 0; i < split; ++i) first.push_back({c.boundary[i].line, c.boundary[i].forward});
    first.push_back({c.boundary[m - 1].line, c.boundary[m - 1].forward});
    for (std::size_t i = split - 1; i < m; ++i) second.push_back({c.boundary[i].line, !c.boundary[i].forward});
    return {first, second};
}

std::pair<RationalPoint, RationalPoint> ProjectiveArrangement::bounding_box() const {
    RationalPoint lo = position(0), hi = lo;
    for (VertexId v = 1; v < vertex_lines_.size(); ++v) {
        const auto p = position(v);
        lo.x = std::min(lo.x, p.x);
        lo.y = std::min(lo.y, p.y);
        hi.x = std::max(hi.x, p.x);
        hi.y = std::max(hi.y, p.y);
    }
    return {lo, hi};
}

RationalPoint ProjectiveArrangement::interior_point(CellId id) const {
    if (cell_split_[id] == 0) {
        std::vector<RationalPoint> pts;
        for (auto i = cell_offset_[id]; i < cell_offset_[id + 1]; ++i) pts.push_back(position(entry_vertex_[i]));
        return centroid(pts);
    }
    auto [lo, hi] = bounding_box();
    lo.x -= 1;
    lo.y -= 1;
    hi.x += 1;
    hi.y += 1;
    std::vector<RationalPoint> poly{{lo.x, lo.y}, {hi.x, lo.y}, {hi.x, hi.y}, {lo.x, hi.y}};
    const auto parts = euclidean_parts(id);
    for (const auto& hp : parts.front()) poly = clip(poly, line(hp.line), hp.above);
    return centroid(poly);
}

std::size_t ProjectiveArrangement::memory_bytes() const {
    return vertex_lines_.capacity() * sizeof(vertex_lines_[0]) + line_vertices_.capacity() * sizeof(std::uint32_t) +
           (entry_vertex_.capacity() + entry_line_.capacity() + cell_offset_.capacity() + cell_split_.capacity()) *
               sizeof(std::uint32_t) +
           rank_of_source_.capacity() * sizeof(std::uint32_t);
}

CellId marked_cell(const ProjectiveArrangement& arr) { return arr.marked_cell(); }

std::vector<CellId> consistently_oriented_cells(const ProjectiveArrangement& arr) {
    std::vector<CellId> out;
    for (CellId c = 0; c < arr.cell_count(); ++c)
        if (arr.cell(c).consistently_oriented()) out.push_back(c);
    return out;
}

std::vector<LineDirection> orient_lines(const ProjectiveArrangement& arr) {
    std::vector<LineDirection> out;
    for (const auto& l : arr.lines()) out.push_back({l.source, +1});
    std::sort(out.begin(), out.end(), [](const LineDirection& a, const LineDirection& b) { return a.line < b.line; });
    return out;
}

std::vector<LineDirection> orient_lines_by_peeling(const ProjectiveArrangement& arr, int sense) {
    std::vector<DualLine> remaining = arr.lines();
    std::vector<LineDirection> out;
    while (remaining.size() >= 2) {
        const auto sub = build_arrangement(remaining);
        const auto c = sub.cell(sub.marked_cell());
        const std::size_t m = c.boundary.size();

        // Direction in which the walk travels along each boundary edge.
        std::vector<int> travel(m);
        for (std::size_t i = 0; i < m; ++i) {
            const auto& e = c.boundary[i];
            if (e.through_infinity) {
                travel[i] = sub.vertices_on_line(e.line).back() == e.vertex ? +1 : -1;
            } else {
                const auto& next = c.boundary[(i + 1) % m];
                travel[i] = sub.position(e.vertex).x < sub.position(next.vertex).x ? +1 : -1;
            }
        }
        // Fix the rotational sense around vertical infinity: the walk leaves the
        // upper envelope through the steepest line.
        const Label steepest = sub.lines().back().source;
        int flip = 0;
        for (std::size_t i = 0; i < m; ++i)
            if (c.boundary[i].through_infinity && c.boundary[i].line == steepest) flip = travel[i] == sense ? 1 : -1;
        if (flip == 0) throw std::logic_error("marked cell does not reach the steepest line");

        std::vector<Label> peeled;
        for (std::size_t i = 0; i < m; ++i) {
            const Label l = c.boundary[i].line;
            const int dir = travel[i] * flip;
            auto it = std::find_if(out.begin(), out.end(), [&](const LineDirection& d) { return d.line == l; });
            if (it == out.end()) {
                out.push_back({l, dir});
                peeled.push_back(l);
            } else if (it->direction != dir) {
                throw std::logic_error("marked cell boundary is not consistently oriented");
            }
        }
        std::erase_if(remaining, [&](const DualLine& l) { return std::find(peeled.begin(), peeled.end(), l.source) != peeled.end(); });
    }
    if (remaining.size() == 1) out.push_back({remaining.front().source, sense});
    std::sort(out.begin(), out.end(), [](const LineDirection& a, const LineDirection& b) { return a.line < b.line; });
    return out;
}

std::vector<TriangularCell> triangular_cells(const ProjectiveArrangement& arr) {
    struct Record {
        CellId cell;
        std::array<VertexId, 3> vertices;
        std::array<Label, 3> lines;
        std::int32_t middle;  // -1 for the marked cell
    };
    const CellId marked = arr.marked_cell();
    std::size_t count = 0;
    for (CellId id = 0; id < arr.cell_count(); ++id) count += arr.side_count(id) == 3;
    std::vector<Record> records;
    records.reserve(count);
    for (CellId id = 0; id < arr.cell_count(); ++id) {
        if (arr.side_count(id) != 3) continue;
        std::array<BoundaryEntry, 3> e{arr.boundary_entry(id, 0), arr.boundary_entry(id, 1), arr.boundary_entry(id, 2)};
        Record r{id, {e[0].vertex, e[1].vertex, e[2].vertex}, {e[0].line, e[1].line, e[2].line}, -1};
        if (id != marked) {
            // Vertex i sits between edge i-1 (arriving) and edge i (leaving); it
            // is the middle of the order iff both edges run the same way.
            for (int i = 0; i < 3; ++i)
                if (e[(i + 2) % 3].forward == e[i].forward) {
                    if (r.middle >= 0) throw std::logic_error("unmarked triangle is consistently oriented");
                    r.middle = i;
                }
            if (r.middle < 0) throw std::logic_error("triangle without exit vertex");
        }
        records.push_back(r);
    }

    // Sort by the sorted line triple: scatter into a few groups by lowest
    // line, then sort each group while it is hot.
    Label bound = 0;
    for (const auto& l : arr.lines()) bound = std::max(bound, l.source + 1);
    const std::uint64_t b = bound;
    auto key_of = [&](const Record& r) {
        auto k = r.lines;
        std::sort(k.begin(), k.end());
        return (k[0] * b + k[1]) * b + k[2];
    };
    unsigned shift = 0;
    while ((bound - 1) >> shift >= 64) ++shift;
    const std::size_t groups = ((bound - 1) >> shift) + 1;
    auto group_of = [&](std::uint64_t key) { return static_cast<std::size_t>(key / (b * b)) >> shift; };
    std::vector<std::size_t> start(groups + 1, 0);
    for (const auto& r : records) ++start[group_of(key_of(r)) + 1];
    std::partial_sum(start.begin(), start.end(), start.begin());
    std::vector<Record> grouped(records.size());
    std::vector<std::uint64_t> keys(records.size());
    {
        auto next = start;
        for (const auto& r : records) {
            const auto k = key_of(r);
            const auto at = next[group_of(k)]++;
            grouped[at] = r;
            keys[at] = k;
        }
    }
    std::vector<Record>().swap(records);

    std::vector<TriangularCell> tris;
    tris.reserve(grouped.size());
    std::vector<std::pair<std::uint64_t, std::size_t>> order;
    for (std::size_t g = 0; g < groups; ++g) {
        order.clear();
        for (auto i = start[g]; i < start[g + 1]; ++i) order.emplace_back(keys[i], i);
        std::sort(order.begin(), order.end());
        for (const auto& o : order) {
            const auto& r = grouped[o.second];
            TriangularCell t{r.cell, r.vertices, r.lines, r.middle < 0, std::nullopt, std::nullopt, std::nullopt};
            if (r.middle >= 0) {
                const int m = r.middle;
                t.exit_vertex = r.vertices[m];
                std::array<Label, 2> el{r.lines[(m + 2) % 3], r.lines[m]};
                if (el[0] > el[1]) std::swap(el[0], el[1]);
                t.exit_lines = el;
                t.witness_line = r.lines[(m + 1) % 3];
            }
            tris.push_back(t);
        }
    }
    return tris;
}

std::optional<VertexId> exit_vertex_by_median_x(const ProjectiveArrangement& arr, const TriangularCell& tri) {
    if (!arr.is_bounded(tri.cell)) return std::nullopt;
    auto v = tri.vertices;
    std::sort(v.begin(), v.end(), [&](VertexId a, VertexId b) { return arr.position(a).x < arr.position(b).x; });
    return v[1];
}

std::vector<Hourglass> hourglasses(const std::vector<TriangularCell>& tris) {
    // Unmarked triangles as (exit vertex, index), sorted by vertex.
    std::vector<std::uint64_t> pairs;
    for (std::size_t i = 0; i < tris.size(); ++i)
        if (!tris[i].marked) pairs.push_back(std::uint64_t{*tris[i].exit_vertex} << 32 | i);
    grouped_sort(pairs);
    const auto& grouped = pairs;

    std::vector<Hourglass> out;
    for (std::size_t k = 0; k < grouped.size();) {
        std::size_t e = k + 1;
        while (e < grouped.size() && grouped[e] >> 32 == grouped[k] >> 32) ++e;
        if (e - k > 2) {
            const auto& l = *tris[static_cast<std::uint32_t>(grouped[k + 2])].exit_lines;
            throw Error(ErrorKind::TripleSharedExitVertex, {l[0], l[1]});
        }
        if (e - k == 2) {
            const auto i = static_cast<std::uint32_t>(grouped[k]), j = static_cast<std::uint32_t>(grouped[k + 1]);
            out.push_back({{i, j}, static_cast<VertexId>(grouped[k] >> 32), *tris[j].exit_lines});
        }
        k = e;
    }
    std::sort(out.begin(), out.end(), [](const Hourglass& a, const Hourglass& b) { return a.slicing_lines < b.slicing_lines; });
    return out;
}

DualComputation compute_dual(const PointSet& s) {
    if (s.size() < 3) throw Error(ErrorKind::TooFewPoints);
    auto shear = shear_to_generic(s);
    auto arr = build_arrangement(dualize(shear.points));
    auto tris = triangular_cells(arr);
    auto hg = hourglasses(tris);

    // (a, b, witness) packed into one sortable key.
    const std::uint64_t m = s.size();
    std::vector<std::uint64_t> items;
    for (const auto& t : tris)
        if (!t.marked) items.push_back(((*t.exit_lines)[0] * m + (*t.exit_lines)[1]) * m + *t.witness_line);
    grouped_sort(items);
    std::vector<ExitEdge> edges;
    const ScaledOrientation orient(s);
    for (const auto key : items) {
        const auto w = static_cast<Label>(key % m);
        const auto b = static_cast<Label>(key / m % m);
        const auto a = static_cast<Label>(key / m / m);
        if (edges.empty() || edges.back().a != a || edges.back().b != b) edges.push_back({a, b, {}});
        edges.back().witnesses.push_back({w, orient(a, b, w) == Orientation::Counterclockwise ? Side::Left : Side::Right});
    }
    return DualComputation{std::move(shear), std::move(arr), std::move(tris), std::move(hg), std::move(edges)};
}

std::vector<ExitEdge> exit_edges_dual(const PointSet& s) { return compute_dual(s).edges; }

HalfplaneTriangleCheck check_halfplane_triangles(const ProjectiveArrangement& arr,
                                                 const std::vector<TriangularCell>& tris, Label l1, Label l2) {
    const auto& d1 = arr.line(l1);
    const auto& d2 = arr.line(l2);
    auto inside = [&](const RationalPoint& p) { return side_of(d1, p) * side_of(d2, p) < 0; };

    HalfplaneTriangleCheck r{false, false};
    for (VertexId v = 0; v < arr.vertex_count() && !r.premise; ++v) {
        const auto lines = arr.vertex(v).lines;
        if (lines[0] == l1 || lines[0] == l2 || lines[1] == l1 || lines[1] == l2) continue;
        r.premise = inside(arr.position(v));
    }
    for (const auto& t : tris) {
        const bool has1 = std::find(t.lines.begin(), t.lines.end(), l1) != t.lines.end();
        const bool has2 = std::find(t.lines.begin(), t.lines.end(), l2) != t.lines.end();
        if (has1 && !has2 && inside(arr.interior_point(t.cell))) {
            r.conclusion = true;
            break;
        }
    }
    return r;
}

}  // namespace exitgraph
