#include "exitgraph/cli.h"

#include "exitgraph/analysis.h"
#include "exitgraph/arrangement.h"
#include "exitgraph/io.h"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

namespace exitgraph {

namespace {

class InputError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

PointSet load(const std::string& path) {
    try {
        return parse_points(read_file(path));
    } catch (const SyntaxError& e) {
        throw InputError(path + ": " + e.what());
    } catch (const Error& e) {
        throw InputError(path + ": " + e.what());
    }
}

std::string edge_name(Label a, Label b) { return "{" + std::to_string(a) + "," + std::to_string(b) + "}"; }

std::string pairs_text(const std::vector<LabelPair>& pairs) {
    std::string s;
    for (const auto& [a, b] : pairs) s += (s.empty() ? "" : " ") + edge_name(a, b);
    return s.empty() ? "none" : s;
}

int cmd_compute(const std::string& file, bool as_json, std::ostream& out) {
    const auto s = load(file);
    if (as_json) {
        out << report_json(s);
        return kExitOk;
    }
    out << describe_exit_edges(exit_edges_dual(s)) << "\n";
    return kExitOk;
}

int cmd_check(const std::string& file, std::ostream& out) {
    const auto s = load(file);
    const auto brute = exit_edges_bruteforce(s);
    const auto holes = exit_edges_via_holes(s);
    const auto dual = exit_edges_dual(s);
    out << "definition (double wedges): " << brute.size() << " exit edges\n";
    out << "4-hole characterization: " << holes.size() << " endpoint pairs\n";
    out << "dual arrangement: " << dual.size() << " exit edges\n";

    const bool holes_ok = holes == endpoint_pairs(brute);
    const bool dual_ok = dual == brute;
    if (holes_ok && dual_ok) {
        out << "all three agree\n";
        return kExitOk;
    }
    if (!holes_ok)
        out << "MISMATCH 4-holes: " << pairs_text(holes) << " vs definition: " << pairs_text(endpoint_pairs(brute)) << "\n";
    if (!dual_ok)
        out << "MISMATCH dual: " << describe_exit_edges(dual) << " vs definition: " << describe_exit_edges(brute) << "\n";
    return kExitPropertyViolation;
}

int cmd_stats(const std::string& file, bool as_json, std::ostream& out) {
    const auto s = load(file);
    if (s.size() < 4) throw InputError("stats needs at least 4 points, got " + std::to_string(s.size()));
    const auto r = stats_report(s);
    if (as_json) {
        out << report_json(s);
        return r.all_hold() ? kExitOk : kExitPropertyViolation;
    }
    out << "n: " << r.n << "\n";
    out << "exit edges: " << r.exit_edge_count << "\n";
    out << "triangular cells: " << r.T << " (" << r.T_unmarked << " unmarked)\n";
    out << "hourglasses: " << r.H << "\n";
    out << "bounds: " << r.lower_bound << " <= " << r.exit_edge_count << " <= " << r.upper_bound << "\n";
    out << "sum x_i: " << r.sum_x << "\n";
    out << "per line (source t h x):\n";
    for (const auto& l : r.per_line) out << "  " << l.source << " " << l.t << " " << l.h << " " << l.x << "\n";
    out << "verdicts:\n";
    for (const auto& v : r.verdicts) out << "  " << (v.holds ? "ok   " : "FAIL ") << v.name << "\n";
    return r.all_hold() ? kExitOk : kExitPropertyViolation;
}

int cmd_render(const std::string& file, const std::string& path, bool dual, std::ostream& out) {
    const auto svg = render_svg(load(file), dual ? RenderMode::Dual : RenderMode::Primal);
    std::ofstream f(path, std::ios::binary);
    if (!f || !(f << svg)) throw InputError("cannot write '" + path + "'");
    out << "wrote " << path << "\n";
    return kExitOk;
}

int cmd_morph(const std::string& file_a, const std::string& file_b, std::ostream& out) {
    const auto a = load(file_a);
    std::vector<Point> b;
    try {
        b = parse_point_list(read_file(file_b));
    } catch (const SyntaxError& e) {
        throw InputError(file_b + ": " + e.what());
    }
    const auto ev = first_collinearity_morph(a, b);
    if (!ev) {
        out << "no collinearity in (0,1]\n";
        return kExitOk;
    }
    const auto [p, q, r] = ev->triple;
    out << "first collinearity at t = " << ev->time.to_string() << " ~ " << ev->time.to_decimal(17) << "\n";
    out << "triples collinear at that time: " << ev->collinear_triples << "\n";
    if (!ev->between) {
        out << "triple " << p << " " << q << " " << r << ", no point strictly between the others\n";
        return kExitOk;
    }
    out << "triple " << p << " " << q << " " << r << ": " << r << " strictly between " << p << " and " << q << "\n";
    const bool exit = is_exit_edge_with_witness(a, p, q, r);
    out << "exit edge " << edge_name(p, q) << " with witness " << r << ": " << (exit ? "yes" : "NO") << "\n";
    return exit ? kExitOk : kExitPropertyViolation;
}

int cmd_compare(const std::string& file_a, const std::string& file_b, bool unlabeled, std::ostream& out) {
    const auto a = load(file_a);
    const auto b = load(file_b);
    const auto c = compare_exit_structures(a, b, unlabeled);
    out << "exit structure: " << (c.same_exit_structure ? "same" : "different") << "\n";
    out << "order type: " << (c.same_order_type ? "same" : "different") << (unlabeled ? " (unlabeled)" : "") << "\n";
    if (c.relabeling) {
        out << "relabeling:";
        for (Label i = 0; i < c.relabeling->size(); ++i) out << " " << i << "->" << (*c.relabeling)[i];
        out << "\n";
    }
    auto list = [&](const char* title, const std::vector<ExitEdge>& edges) {
        if (edges.empty()) return;
        out << title << ": " << describe_exit_edges(edges) << "\n";
    };
    list("only in first", c.only_in_first);
    list("only in second", c.only_in_second);
    out << "orientation mismatches: " << c.orientation_mismatches.size() << "\n";
    const std::size_t shown = std::min<std::size_t>(c.orientation_mismatches.size(), 10);
    for (std::size_t i = 0; i < shown; ++i) {
        const auto& t = c.orientation_mismatches[i];
        out << "  (" << t[0] << "," << t[1] << "," << t[2] << ")\n";
    }
    return kExitOk;
}

int cmd_search(std::size_t n, std::size_t trials, std::uint64_t seed, unsigned threads, std::ostream& out) {
    if (n < 4) throw InputError("search needs --n >= 4");
    if (trials < 1) throw InputError("search needs --trials >= 1");
    const auto r = search_min_exit_edges(n, trials, seed, threads);
    const auto bound = Rational(3 * static_cast<long>(n) - 7, 5).ceil();
    out << "minimum exit edges: " << r.exit_edge_count << " (trial " << r.trial << " of " << trials << ")\n";
    out << "lower bound ceil((3n-7)/5): " << bound.get_str() << "\n";
    out << "# points\n" << serialize_points(r.points);
    return Rational(static_cast<long>(r.exit_edge_count)) >= Rational(bound) ? kExitOk : kExitPropertyViolation;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exit edges of planar point sets", "exitgraph"};
    app.require_subcommand(1);

    std::string file, file_b, out_path;
    bool as_json = false, dual = false, unlabeled = false;
    std::size_t n = 0, trials = 1000;
    std::uint64_t seed = 0;
    unsigned threads = 0;

    auto* compute = app.add_subcommand("compute", "exit edges and witnesses via the dual arrangement");
    compute->add_option("file", file, "point file")->required();
    compute->add_flag("--json", as_json, "print the JSON report");

    auto* check = app.add_subcommand("check", "compare the three exit-edge computations");
    check->add_option("file", file, "point file")->required();

    auto* stats = app.add_subcommand("stats", "triangle and hourglass counts with bound checks (n >= 4)");
    stats->add_option("file", file, "point file")->required();
    stats->add_flag("--json", as_json, "print the JSON report");

    auto* render = app.add_subcommand("render", "write an SVG drawing");
    render->add_option("file", file, "point file")->required();
    render->add_option("--out", out_path, "output SVG path")->required();
    render->add_flag("--dual", dual, "draw the dual arrangement");

    auto* morph = app.add_subcommand("morph", "first collinearity along the linear motion from A to B");
    morph->add_option("a", file, "start point file")->required();
    morph->add_option("b", file_b, "end point file (same size, any position)")->required();

    auto* compare = app.add_subcommand("compare", "compare exit structures and order types");
    compare->add_option("a", file, "first point file")->required();
    compare->add_option("b", file_b, "second point file")->required();
    compare->add_flag("--unlabeled", unlabeled, "search for a relabeling (n <= 8)");

    auto* search = app.add_subcommand("search", "random search for sets with few exit edges");
    search->add_option("--n", n, "number of points")->required();
    search->add_option("--trials", trials, "number of random sets")->capture_default_str();
    search->add_option("--seed", seed, "random seed")->capture_default_str();
    search->add_option("--threads", threads, "worker threads, 0 for all cores (output does not depend on it)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (compute->parsed()) return cmd_compute(file, as_json, out);
        if (check->parsed()) return cmd_check(file, out);
        if (stats->parsed()) return cmd_stats(file, as_json, out);
        if (render->parsed()) return cmd_render(file, out_path, dual, out);
        if (morph->parsed()) return cmd_morph(file, file_b, out);
        if (compare->parsed()) return cmd_compare(file, file_b, unlabeled, out);
        if (search->parsed()) return cmd_search(n, trials, seed, threads, out);
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}

}  // namespace exitgraph
