// Acceptance suite: one PASS/FAIL line per criterion, exit code 0 iff all pass.

#include "exitgraph/analysis.h"
#include "exitgraph/arrangement.h"
#include "exitgraph/io.h"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace exitgraph;

namespace {

// Pinned thresholds.
constexpr std::size_t kSetsPerSize = 1000;         // criterion 1, n = 5..12
constexpr std::size_t kMorphs = 500;               // criterion 5, n = 5..8
constexpr std::size_t kCrossingSets = 500;         // criterion 6, n = 9..12
constexpr std::size_t kOuterFaceSets = 500;        // criterion 6, n = 4..12
constexpr double kMaxSeconds1000 = 10.0;           // criterion 7
constexpr double kMaxDoublingRatio = 5.0;          // criterion 7
constexpr double kMemoryRatioLow = 3.0;            // criterion 7, memory(2n) / memory(n)
constexpr double kMemoryRatioHigh = 5.0;
constexpr int kTimingRepeats = 5;                  // best-of
constexpr std::size_t kSearchTrials = 200;         // criterion 8
constexpr std::size_t kSixPointExitEdges = 4;          // derived by the independent oracle

std::mt19937_64 rng_for(std::uint64_t stream, std::uint64_t a, std::uint64_t b) {
    std::seed_seq seq{static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)};
    return std::mt19937_64(seq);
}

std::int64_t side_for(std::size_t n) { return static_cast<std::int64_t>(4 * n * n); }

bool report(int id, const std::string& title, bool pass, const std::string& detail) {
    std::printf("[%s] %d %s: %s\n", pass ? "PASS" : "FAIL", id, title.c_str(), detail.c_str());
    std::fflush(stdout);
    return pass;
}

std::string fmt(const char* format, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, format, v);
    return buf;
}

bool verdict(const StatsReport& r, const std::string& name) {
    for (const auto& v : r.verdicts)
        if (v.name == name) return v.holds;
    return false;
}

std::size_t occurrences(const std::string& text, const std::string& needle) {
    std::size_t k = 0;
    for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++k;
    return k;
}

struct Corpus {
    std::size_t sets = 0;
    std::size_t oracle_mismatches = 0;
    std::size_t bound_violations = 0;
    std::size_t arrangement_violations = 0;
    std::size_t arrangements = 0;
};

void examine(const PointSet& s, Corpus& c) {
    const auto dual = compute_dual(s);
    const auto brute = exit_edges_bruteforce(s);
    const auto holes = exit_edges_via_holes(s);
    ++c.sets;
    if (dual.edges != brute || holes != endpoint_pairs(brute)) ++c.oracle_mismatches;

    const auto r = stats_report(s, dual);
    const bool bounds = verdict(r, "exit_edges >= ceil((3n-7)/5)") && verdict(r, "exit_edges <= floor(n(n-1)/3)") &&
                        verdict(r, "3T - H >= 3n - 2") && verdict(r, "T >= 2H");
    if (!bounds) ++c.bound_violations;

    ++c.arrangements;
    if (!check_arrangement(dual).all_hold()) ++c.arrangement_violations;
}

double seconds_of(const std::function<void()>& f) {
    double best = 1e300;
    for (int i = 0; i < kTimingRepeats; ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        f();
        best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    }
    return best;
}

}  // namespace

int main() {
    bool all = true;

    // Corpus shared by criteria 1, 3 and 4.
    Corpus corpus;
    for (std::size_t n = 5; n <= 12; ++n)
        for (std::size_t i = 0; i < kSetsPerSize; ++i) {
            auto rng = rng_for(1, n, i);
            examine(random_general_position_set(n, side_for(n), rng), corpus);
        }
    all &= report(1, "tri-oracle equivalence", corpus.oracle_mismatches == 0,
                  std::to_string(corpus.sets) + " random sets at n = 5..12, " + std::to_string(corpus.oracle_mismatches) +
                      " mismatches");

    {
        std::string detail;
        bool ok = true;
        const auto tri = parse_points("0 0\n4 0\n2 4\n");
        const auto tri_edges = exit_edges_dual(tri);
        ok &= tri_edges.size() == 3 && exit_edges_bruteforce(tri) == tri_edges;

        const auto sq = parse_points("0 0\n1 0\n1 1\n0 1\n");
        const auto sq_dual = compute_dual(sq);
        ok &= sq_dual.edges.size() == 2 && endpoint_pairs(sq_dual.edges) == std::vector<LabelPair>{{0, 2}, {1, 3}};
        for (const auto& e : sq_dual.edges) ok &= e.witnesses.size() == 2;
        ok &= sq_dual.hourglasses.size() == 2;
        ok &= sq_dual.edges == exit_edges_bruteforce(sq);
        corpus.arrangements += 3;
        if (!check_arrangement(sq_dual).all_hold()) ++corpus.arrangement_violations;

        const auto six = parse_points("-1 1\n1 1\n-1 -1\n1 -1\n-0.6 0.4\n-0.6 -0.4\n");
        const auto f_dual = exit_edges_dual(six);
        const auto f_brute = exit_edges_bruteforce(six);
        const bool f_agree = f_dual == f_brute && exit_edges_via_holes(six) == endpoint_pairs(f_brute);
        const auto drawn = occurrences(render_svg(six, RenderMode::Primal), "class=\"exit-edge\"");
        ok &= f_agree && f_dual.size() == kSixPointExitEdges && drawn == kSixPointExitEdges;
        const auto f_full = compute_dual(six);
        if (!check_arrangement(f_full).all_hold()) ++corpus.arrangement_violations;
        if (!check_arrangement(compute_dual(tri)).all_hold()) ++corpus.arrangement_violations;

        detail = "triangle " + std::to_string(tri_edges.size()) + " edges; square " + std::to_string(sq_dual.edges.size()) +
                 " diagonals, " + std::to_string(sq_dual.hourglasses.size()) + " hourglasses; six-point set " +
                 std::to_string(f_dual.size()) + " edges, methods " + (f_agree ? "agree" : "DISAGREE") + ", " +
                 std::to_string(drawn) + " drawn";
        all &= report(2, "known small cases", ok, detail);
    }

    all &= report(3, "exit-edge bounds", corpus.bound_violations == 0,
                  std::to_string(corpus.bound_violations) + " violations over " + std::to_string(corpus.sets) + " sets");

    all &= report(4, "arrangement invariants", corpus.arrangement_violations == 0,
                  std::to_string(corpus.arrangement_violations) + " violations over " + std::to_string(corpus.arrangements) +
                      " arrangements");

    {
        std::size_t events = 0, between = 0, violations = 0;
        for (std::size_t i = 0; i < kMorphs; ++i) {
            const std::size_t n = 5 + i % 4;
            auto rng = rng_for(5, n, i);
            const auto s0 = random_general_position_set(n, side_for(n), rng);
            const auto s1 = random_general_position_set(n, side_for(n), rng);
            const auto ev = first_collinearity_morph(s0, std::vector<Point>(s1.begin(), s1.end()));
            if (!ev) continue;
            ++events;
            if (!ev->between) continue;
            ++between;
            const auto [a, b, c] = ev->triple;
            const auto brute = exit_edges_bruteforce(s0);
            const bool found = std::any_of(brute.begin(), brute.end(), [&](const ExitEdge& e) {
                return e.a == a && e.b == b &&
                       std::any_of(e.witnesses.begin(), e.witnesses.end(), [&](const Witness& w) { return w.label == c; });
            });
            if (!found) ++violations;
        }
        all &= report(5, "first-collinearity morphs", violations == 0,
                      std::to_string(kMorphs) + " morphs, " + std::to_string(events) + " events, " + std::to_string(between) +
                          " with betweenness, " + std::to_string(violations) + " violations");
    }

    {
        std::size_t no_crossing = 0, off_hull = 0;
        for (std::size_t i = 0; i < kCrossingSets; ++i) {
            const std::size_t n = 9 + i % 4;
            auto rng = rng_for(6, n, i);
            if (exit_graph_crossings(random_general_position_set(n, side_for(n), rng)) == 0) ++no_crossing;
        }
        for (std::size_t i = 0; i < kOuterFaceSets; ++i) {
            const std::size_t n = 4 + i % 9;
            auto rng = rng_for(7, n, i);
            const auto s = random_general_position_set(n, side_for(n), rng);
            auto hull = convex_hull(s);
            std::sort(hull.begin(), hull.end());
            const auto outer = outer_face_vertices(s);
            if (!std::includes(hull.begin(), hull.end(), outer.begin(), outer.end())) ++off_hull;
        }
        all &= report(6, "crossings and outer face", no_crossing == 0 && off_hull == 0,
                      std::to_string(no_crossing) + " of " + std::to_string(kCrossingSets) + " sets without a crossing, " +
                          std::to_string(off_hull) + " of " + std::to_string(kOuterFaceSets) + " outer faces off the hull");
    }

    {
        auto rng1 = rng_for(7000, 1000, 0);
        const auto s1 = random_general_position_set(1000, side_for(1000), rng1);
        auto rng2 = rng_for(7000, 2000, 0);
        const auto s2 = random_general_position_set(2000, side_for(2000), rng2);
        std::size_t e1 = 0, e2 = 0;
        const double t1 = seconds_of([&] { e1 = exit_edges_dual(s1).size(); });
        const double t2 = seconds_of([&] { e2 = exit_edges_dual(s2).size(); });
        const double m1 = static_cast<double>(build_arrangement(dualize(shear_to_generic(s1).points)).memory_bytes());
        const double m2 = static_cast<double>(build_arrangement(dualize(shear_to_generic(s2).points)).memory_bytes());
        const double ratio = t2 / t1, mratio = m2 / m1;
        const bool ok = t1 < kMaxSeconds1000 && ratio <= kMaxDoublingRatio && mratio >= kMemoryRatioLow &&
                        mratio <= kMemoryRatioHigh;
        all &= report(7, "performance", ok,
                      "n=1000 " + fmt("%.3f", t1) + " s (" + std::to_string(e1) + " edges), n=2000 " + fmt("%.3f", t2) +
                          " s (" + std::to_string(e2) + " edges), time ratio " + fmt("%.2f", ratio) + ", memory " +
                          fmt("%.1f", m1 / 1e6) + " MB -> " + fmt("%.1f", m2 / 1e6) + " MB (ratio " + fmt("%.2f", mratio) +
                          ", " + fmt("%.1f", m1 / (1000.0 * 1000.0)) + " bytes/n^2 at n=1000)");
    }

    {
        const auto a = search_min_exit_edges(9, kSearchTrials, 2024, 1);
        const auto b = search_min_exit_edges(9, kSearchTrials, 2024, 4);
        const bool deterministic = a.points == b.points && a.exit_edge_count == b.exit_edge_count && a.trial == b.trial;
        const bool bound = a.exit_edge_count >= 4;

        const auto sq = parse_points("0 0\n1 0\n1 1\n0 1\n");
        const auto tpi = parse_points("0 0\n4 0\n2 4\n2 1\n");
        const auto same = compare_exit_structures(sq, sq);
        const auto diff = compare_exit_structures(sq, tpi);
        const bool compare_ok =
            same.same_exit_structure && same.same_order_type && !diff.same_exit_structure && !diff.same_order_type;

        all &= report(8, "search and compare substitutes", deterministic && bound && compare_ok,
                      "search n=9 over " + std::to_string(kSearchTrials) + " trials: minimum " +
                          std::to_string(a.exit_edge_count) + " (bound 4), " +
                          (deterministic ? "deterministic" : "NOT deterministic") + " across thread counts; compare " +
                          (compare_ok ? "classifies" : "MISCLASSIFIES") +
                          " the same/different fixtures; the n-3 family and the counterexample pair are not reproduced");
    }

    std::printf("%s\n", all ? "all criteria pass" : "some criteria FAIL");
    return all ? 0 : 1;
}
