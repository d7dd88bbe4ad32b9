#pragma once

#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "diskcolor/extension.hpp"
#include "diskcolor/json_io.hpp"
#include "diskcolor/polychromatic.hpp"
#include "diskcolor/svg.hpp"

namespace diskcolor {

// Exit codes: 0 success and verified, 1 verification or construction
// failure, 2 input error.
namespace cli {

inline Point parse_point_arg(const std::string& s) {
    const auto comma = s.find(',');
    if (comma == std::string::npos)
        throw InputError("expected \"x,y\" with rational components: " + s);
    try {
        return Point(parse_rational(s.substr(0, comma)), parse_rational(s.substr(comma + 1)));
    } catch (const Error& e) {
        throw InputError(e.what());
    }
}

// Distinct rational points on the circle, counterclockwise.
inline std::vector<Point> default_prescribed_points(const Circle& c, int n) {
    std::vector<Point> qs;
    for (int i = 0; i < n; ++i)
        qs.push_back(point_at(c, ArcParam::of(Rational(2 * i - n, 2))));
    return qs;
}

inline int cmd_generate(const std::string& kind, int m, const Rational& gamma,
                        std::size_t budget_bits, const std::string& out_path,
                        std::ostream& out, std::ostream& err) {
    ConstructionOptions opts;
    opts.budget_bits = budget_bits;
    const Circle unit(Point(0, 0), 1, Point(1, 0));

    try {
        Realization real(unit, gamma, Hypergraph{});
        ConstructionReport rep;
        std::size_t max_bits = 0;
        if (kind == "tree" || kind == "h2") {
            const RootedTree t = complete_mary_tree(m);
            real = realize_tree(t, unit, default_prescribed_points(unit, t.n), gamma, opts, &rep);
            max_bits = rep.max_bits;
            if (kind == "h2" && !(real.target == build_h2(m)))
                throw InvariantViolation("generate: target differs from the m-ary hypergraph");
        } else if (kind == "h3") {
            H3Report h3 = realize_h3_report(m, gamma, opts);
            out << "target: " << h3.target.n << " vertices, " << h3.target.edges.size()
                << " edges\n";
            if (!h3.realization) {
                err << "budget exceeded: " << h3.failure << "\n";
                return 1;
            }
            real = std::move(*h3.realization);
            max_bits = h3.max_bits;
        } else {
            err << "unknown kind: " << kind << "\n";
            return 2;
        }

        const auto verdict = verify_realization(real);
        if (!verdict.ok) {
            err << "verification failed: " << verdict.message << "\n";
            return 1;
        }
        bool stabbed_ok = true;
        if (real.stabbed)
            for (const auto* d : real.all_disks())
                if (side_of_circle(real.anchor_circle.center, d->circle) != Side::Inside)
                    stabbed_ok = false;
        if (!out_path.empty()) save_json_file(out_path, to_json(real));
        out << "points: " << real.points.size() << "\n";
        out << "disks: " << real.all_disks().size() << " (" << real.sibling_disks.size()
            << " sibling, " << real.descendent_disks.size() << " descendent)\n";
        out << "max coordinate bits: " << std::max(max_bits, real.max_coordinate_bits()) << "\n";
        out << "stabbed: " << (real.stabbed ? (stabbed_ok ? "yes" : "VIOLATED") : "n/a") << "\n";
        out << "verified: ok\n";
        return stabbed_ok ? 0 : 1;
    } catch (const PrecisionBudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << "\n";
        return 1;
    }
}

inline int cmd_verify(const std::string& path, std::ostream& out, std::ostream& err) {
    const Realization real = realization_from_json(load_json_file(path));
    const auto verdict = verify_realization(real);
    if (!verdict.ok) {
        err << "verification failed: " << verdict.message;
        if (verdict.disk_index >= 0) {
            err << " (disk " << verdict.disk_index << "; missing:";
            for (int v : verdict.missing) err << " " << v;
            err << "; extra:";
            for (int v : verdict.extra) err << " " << v;
            err << ")";
        }
        err << "\n";
        return 1;
    }
    if (!real.prescribed.empty()) {
        if (real.prescribed.size() != real.points.size()) {
            err << "verification failed: prescribed point count mismatch\n";
            return 1;
        }
        for (std::size_t i = 0; i < real.points.size(); ++i)
            if (!points_close(real.points[i], real.prescribed[i], real.gamma)) {
                err << "verification failed: point " << i << " drifted farther than gamma\n";
                return 1;
            }
    }
    if (real.stabbed) {
        for (const auto* d : real.all_disks()) {
            if (!circles_close(d->circle, real.anchor_circle, real.gamma)) {
                err << "verification failed: disk not gamma-close to the anchor\n";
                return 1;
            }
            if (side_of_circle(real.anchor_circle.center, d->circle) != Side::Inside) {
                err << "verification failed: anchor center not inside every disk\n";
                return 1;
            }
        }
    }
    out << "ok: " << real.points.size() << " points, " << real.all_disks().size()
        << " disks, target verified\n";
    return 0;
}

inline int cmd_color(const std::string& points_path, const Point& origin, int k,
                     const Point& axis, bool cross_check, const Rational& grid_resolution,
                     const std::string& out_path, std::ostream& out, std::ostream& err) {
    const auto j = load_json_file(points_path);
    const std::vector<Point> pts = points_from_json(j);
    Point o = origin;
    if (j.contains("origin")) o = point_from_json(j.at("origin"));

    const RangeFamily fam = stabbed_unit_disk_ranges(pts, o);
    const Coloring col = color_stabbed_unit_disks(pts, o, k, axis, &fam);
    const int threshold = 8 * k - 7;
    const auto violations = verify_polychromatic(pts, o, k, col, threshold, axis, &fam);
    if (!violations.empty()) {
        err << "verification failed: " << violations.size() << " violating ranges at threshold "
            << threshold << "\n";
        return 1;
    }
    out << "colored " << pts.size() << " points with " << k
        << " colors; certificate: no stabbed unit disk with >= " << threshold
        << " points misses a color (" << fam.ranges.size() << " ranges checked)\n";

    if (cross_check) {
        const RangeFamily grid = grid_oracle_ranges(pts, o, grid_resolution);
        const auto gv = verify_polychromatic(pts, o, k, col, threshold, axis, &grid);
        out << "grid cross-check at resolution " << to_fraction_string(grid_resolution) << ": "
            << (gv.empty() ? "identical verdict (no violations)" : "DIFFERENT VERDICT") << "\n";
        if (!gv.empty()) return 1;
    }

    if (!out_path.empty()) {
        nlohmann::json cj = to_json(col);
        cj["certificate"] = {{"threshold", threshold},
                             {"ranges_checked", fam.ranges.size()},
                             {"violations", 0},
                             {"origin", to_json(o)}};
        save_json_file(out_path, cj);
    }
    return 0;
}

inline int cmd_ranges(const std::string& points_path, const Point& origin, bool oracle,
                      const Rational& grid_resolution, const std::string& out_path,
                      std::ostream& out, std::ostream&) {
    const auto j = load_json_file(points_path);
    const std::vector<Point> pts = points_from_json(j);
    Point o = origin;
    if (j.contains("origin")) o = point_from_json(j.at("origin"));
    const RangeFamily fam = oracle ? grid_oracle_ranges(pts, o, grid_resolution)
                                   : stabbed_unit_disk_ranges(pts, o);
    out << (oracle ? "grid oracle" : "exact") << " stabbed unit-disk ranges: "
        << fam.ranges.size() << "\n";
    if (!out_path.empty()) save_json_file(out_path, to_json(fam));
    return 0;
}

inline int cmd_cluster_demo(int m, unsigned long seed, std::ostream& out, std::ostream& err) {
    const H3Report rep = realize_h3_report(m);
    if (!rep.realization) {
        err << "budget exceeded: " << rep.failure << "\n";
        return 1;
    }
    const Realization& real = *rep.realization;
    const int n = static_cast<int>(real.points.size());

    // Perturb to general position within the realization's safety radius.
    const Rational pert = perturbation_radius(real.points, real.all_circles());
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> d(-127, 127);
    std::vector<Point> pts;
    std::vector<std::pair<int, int>> edges;
    for (int attempt = 0;; ++attempt) {
        if (attempt > 64) throw DegeneratePosition("cluster-demo: perturbation kept failing");
        pts.clear();
        for (const auto& p : real.points)
            pts.push_back(Point(p.x + pert * Rational(d(rng), 256),
                                p.y + pert * Rational(d(rng), 256)));
        try {
            edges = delaunay_graph(pts);
            break;
        } catch (const DegeneratePosition&) {
            continue; // redraw
        }
    }
    // The perturbation preserves the induced hypergraph.
    {
        Realization moved = real;
        moved.points = pts;
        if (!verify_realization(moved).ok)
            throw InvariantViolation("cluster-demo: perturbation changed the hypergraph");
    }

    const int e = static_cast<int>(edges.size());
    const bool planar_bound = n < 3 || e <= 3 * n - 6;
    out << "points: " << n << ", delaunay edges: " << e << ", planarity bound e <= 3v-6: "
        << (planar_bound ? "ok" : "VIOLATED") << "\n";
    if (!planar_bound) return 1;

    // Every 3-coloring must leave a monochromatic connected component of
    // size >= m in the Delaunay graph.
    std::vector<std::vector<int>> adj(n);
    for (const auto& [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    long total = 1;
    for (int i = 0; i < n; ++i) total *= 3;
    long ok_count = 0;
    for (long code = 0; code < total; ++code) {
        std::vector<int> color(n);
        long c = code;
        for (int i = 0; i < n; ++i) {
            color[i] = static_cast<int>(c % 3);
            c /= 3;
        }
        int best = 0;
        std::vector<char> seen(n, 0);
        for (int s = 0; s < n; ++s) {
            if (seen[s]) continue;
            int size = 0;
            std::vector<int> stack{s};
            seen[s] = 1;
            while (!stack.empty()) {
                const int v = stack.back();
                stack.pop_back();
                ++size;
                for (int u : adj[v])
                    if (!seen[u] && color[u] == color[s]) {
                        seen[u] = 1;
                        stack.push_back(u);
                    }
            }
            best = std::max(best, size);
        }
        if (best >= m) ++ok_count;
    }
    out << "colorings checked: " << total << ", with monochromatic component >= " << m << ": "
        << ok_count << "\n";
    if (ok_count != total) {
        err << "clustering demo failed: some coloring has only small monochromatic components\n";
        return 1;
    }
    out << "every 3-coloring has a monochromatic Delaunay component of size >= " << m << "\n";
    return 0;
}

inline int cmd_render(const std::string& in_path, const std::string& coloring_path,
                      const std::string& out_path, std::ostream& out, std::ostream&) {
    const auto j = load_json_file(in_path);
    std::string svg;
    Coloring col;
    const Coloring* colp = nullptr;
    if (!coloring_path.empty()) {
        col = coloring_from_json(load_json_file(coloring_path));
        colp = &col;
    }
    if (j.contains("anchor")) {
        const Realization real = realization_from_json(j);
        svg = render_svg(real.points, real.all_circles(), &real.anchor_circle, nullptr, colp);
    } else if (j.contains("points")) {
        const auto pts = points_from_json(j);
        Point o(0, 0);
        const bool has_o = j.contains("origin");
        if (has_o) o = point_from_json(j.at("origin"));
        svg = render_svg(pts, {}, nullptr, has_o ? &o : nullptr, colp);
    } else {
        throw InputError("render: unrecognized input file shape");
    }
    std::ofstream f(out_path);
    if (!f) throw InputError("cannot write " + out_path);
    f << svg;
    out << "wrote " << out_path << " (" << svg.size() << " bytes)\n";
    return 0;
}

} // namespace cli

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact disk-range constructions and polychromatic colorings"};
    app.require_subcommand(1);

    std::string kind = "h3", out_path, points_path, in_path, coloring_path;
    int m = 2, k = 2;
    unsigned long seed = 1;
    std::string gamma_s = "1/16", origin_s = "0,0", axis_s = "1,0", grid_res_s = "1/512";
    std::size_t budget_bits = std::size_t(1) << 20;
    bool cross_check = false, oracle = false;

    auto* gen = app.add_subcommand("generate", "construct a realization and verify it");
    gen->add_option("kind", kind, "tree, h2 or h3")->required();
    gen->add_option("--m", m, "tree arity / uniformity")->required();
    gen->add_option("--gamma", gamma_s, "closeness to the anchor circle (rational)");
    gen->add_option("--budget-bits", budget_bits, "per-coordinate bit budget");
    gen->add_option("--out", out_path, "output realization JSON");

    auto* ver = app.add_subcommand("verify", "re-verify a realization file");
    ver->add_option("file", in_path, "realization JSON")->required();

    auto* col = app.add_subcommand("color", "polychromatic k-coloring for stabbed unit disks");
    col->add_option("--points", points_path, "points JSON")->required();
    col->add_option("--k", k, "number of colors")->required();
    col->add_option("--origin", origin_s, "origin o as \"x,y\"");
    col->add_option("--axis", axis_s, "quarter axis direction as \"dx,dy\"");
    col->add_option("--grid-resolution", grid_res_s, "grid oracle resolution (dyadic)");
    col->add_flag("--cross-check", cross_check, "also verify against the grid oracle");
    col->add_option("--out", out_path, "output coloring JSON");

    auto* rng = app.add_subcommand("ranges", "enumerate stabbed unit-disk ranges");
    rng->add_option("--points", points_path, "points JSON")->required();
    rng->add_option("--origin", origin_s, "origin o as \"x,y\"");
    rng->add_flag("--oracle", oracle, "use the grid oracle instead of exact enumeration");
    rng->add_option("--grid-resolution", grid_res_s, "grid oracle resolution (dyadic)");
    rng->add_option("--out", out_path, "output ranges JSON");

    auto* clu = app.add_subcommand("cluster-demo", "Delaunay clustering demonstration");
    clu->add_option("--m", m, "cluster size bound (2 at desk scale)");
    clu->add_option("--seed", seed, "perturbation seed");

    auto* ren = app.add_subcommand("render", "render a realization or point set to SVG");
    ren->add_option("file", in_path, "realization or points JSON")->required();
    ren->add_option("--coloring", coloring_path, "coloring JSON for point fills");
    ren->add_option("--out", out_path, "output SVG path")->required();

    std::vector<const char*> argv{"diskcolor"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            out << app.help();
            return 0;
        }
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (gen->parsed())
            return cli::cmd_generate(kind, m, parse_rational(gamma_s), budget_bits, out_path, out,
                                     err);
        if (ver->parsed()) return cli::cmd_verify(in_path, out, err);
        if (col->parsed())
            return cli::cmd_color(points_path, cli::parse_point_arg(origin_s), k,
                                  cli::parse_point_arg(axis_s), cross_check,
                                  parse_rational(grid_res_s), out_path, out, err);
        if (rng->parsed())
            return cli::cmd_ranges(points_path, cli::parse_point_arg(origin_s), oracle,
                                   parse_rational(grid_res_s), out_path, out, err);
        if (clu->parsed()) return cli::cmd_cluster_demo(m, seed, out, err);
        if (ren->parsed()) return cli::cmd_render(in_path, coloring_path, out_path, out, err);
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

} // namespace diskcolor
