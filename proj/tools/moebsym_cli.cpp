#include "moebsym/errors.hpp"
#include "moebsym/figures.hpp"
#include "moebsym/geometry.hpp"
#include "moebsym/lipschitz.hpp"
#include "moebsym/moebius.hpp"
#include "moebsym/plane.hpp"
#include "moebsym/report.hpp"
#include "moebsym/symmetrize.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

using namespace moebsym;

namespace {

struct Common {
    std::string input;
    std::string out;
    std::string format = "structured";
    std::uint64_t seed = 1;
    std::uint64_t budget = 0;  // 0: use the command's metric-specific default
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--input", c.input, "JSON point document");
    cmd->add_option("--out", c.out, "also write the report to this file");
    cmd->add_option("--format", c.format, "report format")
        ->check(CLI::IsMember({"text", "structured"}));
    cmd->add_option("--seed", c.seed, "RNG seed for sampling estimators");
    cmd->add_option("--budget", c.budget, "sample budget for estimators");
}

ExtendedPoint parse_point_arg(const std::string& s) {
    if (s == "inf") return ExtendedPoint::infinity();
    ordered_json v;
    try {
        v = ordered_json::parse(s);
    } catch (const nlohmann::detail::exception& e) {
        throw parse_error("point '" + s + "': " + e.what());
    }
    return parse_point(v);
}

std::map<std::string, ExtendedPoint>
load_points(const Common& c, const std::map<std::string, std::string>& inline_args) {
    std::map<std::string, ExtendedPoint> pts;
    if (!c.input.empty()) {
        std::ifstream f(c.input, std::ios::binary);
        if (!f) throw parse_error("cannot open input file: " + c.input);
        std::stringstream ss;
        ss << f.rdbuf();
        pts = parse_point_document(ss.str()).points;
    }
    for (const auto& [name, arg] : inline_args)
        if (!arg.empty()) pts[name] = parse_point_arg(arg);
    return pts;
}

cplx need_finite(const std::map<std::string, ExtendedPoint>& pts,
                 const std::string& name) {
    const auto it = pts.find(name);
    if (it == pts.end())
        throw parse_error("missing required point '" + name + "'");
    if (it->second.inf)
        throw parse_error("point '" + name + "' must be finite");
    return it->second.value;
}

ordered_json cplx_json(cplx z) { return ordered_json::array({z.real(), z.imag()}); }

ordered_json map_json(const MoebiusMap& m) {
    ordered_json j;
    j["a"] = cplx_json(m.a);
    j["b"] = cplx_json(m.b);
    j["c"] = cplx_json(m.c);
    j["d"] = cplx_json(m.d);
    j["reversing"] = m.reversing;
    return j;
}

ordered_json estimate_json(const LipschitzEstimate& e) {
    ordered_json j;
    j["value"] = e.value;
    j["method"] = e.method == LipMethod::derivative_sup ? "derivative-sup"
                                                        : "pair-sampling";
    j["witness"] = point_json(e.witness);
    if (e.method == LipMethod::pair_sampling)
        j["witness_pair"] = point_json(e.witness_pair);
    j["samples"] = static_cast<std::uint64_t>(e.samples);
    j["seed"] = e.seed;
    return j;
}

// Print the report (and optionally copy it to --out), wrapping the result in
// a manifest whose digest covers the serialized result alone.
int emit(const std::string& command, ordered_json inputs, const Common& c,
         std::uint64_t budget_used, ordered_json result) {
    ordered_json doc;
    doc["result"] = std::move(result);
    doc["manifest"] = run_manifest(command, std::move(inputs), c.seed,
                                   budget_used, dump_json(doc["result"]));
    const std::string text =
        c.format == "text" ? render_text(doc) : dump_json(doc);
    std::cout << text;
    if (!c.out.empty()) {
        std::ofstream f(c.out, std::ios::binary);
        if (!f) throw parse_error("cannot open output file: " + c.out);
        f << text;
    }
    return 0;
}

int run_symmetrize(const Common& c, const std::map<std::string, std::string>& inline_pts) {
    const auto pts = load_points(c, inline_pts);
    const cplx a = need_finite(pts, "a"), b = need_finite(pts, "b");
    const cplx cc = need_finite(pts, "c"), d = need_finite(pts, "d");
    const QuadSymmetrization sym = symmetrize_quadruple(a, b, cc, d);

    ordered_json res;
    res["branch"] = sym.branch == QuadBranch::linear ? "linear" : "generic";
    res["y"] = cplx_json(sym.y);
    res["center"] = cplx_json(sym.center);
    res["map"] = map_json(sym.map);
    if (sym.branch == QuadBranch::generic) {
        res["p"] = cplx_json(sym.p);
        res["q"] = cplx_json(sym.q);
        res["s"] = cplx_json(sym.s);
        res["k0"] = cplx_json(sym.k0);
        res["k1"] = cplx_json(sym.k1);
        res["root_tie"] = sym.root_tie;
    }
    const cplx images[4] = {apply(sym.map, ExtendedPoint(a)).value,
                            apply(sym.map, ExtendedPoint(b)).value,
                            apply(sym.map, ExtendedPoint(cc)).value,
                            apply(sym.map, ExtendedPoint(d)).value};
    const cplx targets[4] = {cplx(-1.0), sym.y, -sym.y, cplx(1.0)};
    ordered_json imgs, resid;
    const char* names[4] = {"a", "b", "c", "d"};
    for (int i = 0; i < 4; ++i) {
        imgs[names[i]] = cplx_json(images[i]);
        resid[names[i]] = std::abs(images[i] - targets[i]);
    }
    res["images"] = imgs;
    res["residuals"] = resid;

    ordered_json inputs;
    inputs["a"] = cplx_json(a);
    inputs["b"] = cplx_json(b);
    inputs["c"] = cplx_json(cc);
    inputs["d"] = cplx_json(d);
    return emit("symmetrize", inputs, c, 0, res);
}

int run_normalize(const Common& c, const std::string& mode_name,
                  const std::map<std::string, std::string>& inline_pts) {
    const auto pts = load_points(c, inline_pts);
    const cplx a = need_finite(pts, "a"), b = need_finite(pts, "b");
    PairMode mode = PairMode::antipodal;
    if (mode_name == "collinear") mode = PairMode::collinear;
    else if (mode_name == "equinorm") mode = PairMode::equinorm;

    const PairNormalization n = normalize_pair(a, b, mode);
    const std::uint64_t budget = c.budget ? c.budget : 4096;
    const LipschitzEstimate est = estimate_lipschitz(
        n.map, Metric::euclidean, LipMethod::derivative_sup, budget, c.seed);

    ordered_json res;
    res["mode"] = mode_name;
    res["h_ab"] = cplx_json(n.h_ab);
    res["k"] = cplx_json(n.k);
    res["map"] = map_json(n.map);
    res["images"]["a"] = point_json(apply(n.map, ExtendedPoint(a)));
    res["images"]["b"] = point_json(apply(n.map, ExtendedPoint(b)));
    res["lip_analytic"] = n.lip;
    res["lip_empirical"] = estimate_json(est);

    ordered_json inputs;
    inputs["a"] = cplx_json(a);
    inputs["b"] = cplx_json(b);
    inputs["mode"] = mode_name;
    return emit("normalize", inputs, c, budget, res);
}

ordered_json circle_quad_method_json(const CircleQuadSymmetrization& s, cplx a,
                                     cplx b, cplx cc, cplx d,
                                     std::uint64_t budget, std::uint64_t seed) {
    ordered_json j;
    j["map"] = map_json(s.map);
    j["lip_analytic"] = s.lip;
    j["lip_empirical"] = estimate_json(estimate_lipschitz(
        s.map, Metric::euclidean, LipMethod::derivative_sup, budget, seed));
    const cplx img[4] = {apply(s.map, ExtendedPoint(a)).value,
                         apply(s.map, ExtendedPoint(b)).value,
                         apply(s.map, ExtendedPoint(cc)).value,
                         apply(s.map, ExtendedPoint(d)).value};
    j["images"]["a"] = cplx_json(img[0]);
    j["images"]["b"] = cplx_json(img[1]);
    j["images"]["c"] = cplx_json(img[2]);
    j["images"]["d"] = cplx_json(img[3]);
    if (s.method == QuadMethod::reflection) {
        const auto axis = reflection_axis(s.map, a, b, cc, d);
        if (axis) j["axis_angle"] = *axis;
        else j["axis_angle"] = nullptr;
    } else {
        j["antipodal_residuals"] =
            ordered_json::array({std::abs(img[0] + img[2]), std::abs(img[1] + img[3])});
    }
    return j;
}

int run_circle_quad(const Common& c, const std::vector<double>& angles,
                    const std::string& method_name) {
    const cplx a = std::polar(1.0, angles[0]), b = std::polar(1.0, angles[1]);
    const cplx cc = std::polar(1.0, angles[2]), d = std::polar(1.0, angles[3]);
    const std::uint64_t budget = c.budget ? c.budget : 4096;

    ordered_json res;
    res["angles"] = ordered_json::array({angles[0], angles[1], angles[2], angles[3]});
    const QuadCirclePoints qp = circle_quad_points(a, b, cc, d);
    res["w"]["w1"] = point_json(qp.w1);
    res["w"]["w2"] = point_json(qp.w2);
    res["w"]["w3"] = point_json(qp.w3);
    res["w"]["w4"] = cplx_json(qp.w4);
    res["w"]["w5"] = cplx_json(qp.w5);

    // With no explicit method, report both side by side; a method whose
    // precondition fails (reflection needs w4 != 0) reports its error inline.
    for (const char* name : {"reflection", "antipodal"}) {
        if (!method_name.empty() && method_name != name) continue;
        const QuadMethod method = std::string(name) == "reflection"
                                      ? QuadMethod::reflection
                                      : QuadMethod::antipodal;
        if (method_name.empty()) {
            try {
                res[name] = circle_quad_method_json(
                    symmetrize_circle_quadruple(a, b, cc, d, method), a, b, cc, d,
                    budget, c.seed);
            } catch (const domain_error& e) {
                res[name]["error"] = e.what();
            }
        } else {
            res[name] = circle_quad_method_json(
                symmetrize_circle_quadruple(a, b, cc, d, method), a, b, cc, d,
                budget, c.seed);
        }
    }

    ordered_json inputs;
    inputs["angles"] = res["angles"];
    inputs["method"] = method_name.empty() ? "both" : method_name;
    return emit("circle-quad", inputs, c, budget, res);
}

int run_lipschitz(const Common& c, const std::vector<double>& coeffs,
                  bool reversing, const std::string& ta_arg,
                  const std::vector<std::string>& tab_args,
                  const std::string& metric_name) {
    MoebiusMap m;
    ordered_json inputs;
    double analytic = -1.0;
    if (!coeffs.empty()) {
        m = moebius(cplx(coeffs[0], coeffs[1]), cplx(coeffs[2], coeffs[3]),
                    cplx(coeffs[4], coeffs[5]), cplx(coeffs[6], coeffs[7]),
                    reversing);
        inputs["coeffs"] = ordered_json(coeffs);
        inputs["reversing"] = reversing;
    } else if (!ta_arg.empty()) {
        const ExtendedPoint a = parse_point_arg(ta_arg);
        if (a.inf) throw parse_error("--ta: the parameter must be finite");
        m = disk_automorphism(a.value);
        analytic = lip_disk_automorphism(a.value);
        inputs["ta"] = point_json(a);
    } else if (tab_args.size() == 2) {
        const ExtendedPoint a = parse_point_arg(tab_args[0]);
        const ExtendedPoint b = parse_point_arg(tab_args[1]);
        if (a.inf || b.inf) throw parse_error("--tab: the parameters must be finite");
        m = disk_map_pair(a.value, b.value);
        analytic = lip_disk_map_pair(a.value, b.value);
        inputs["tab"] = ordered_json::array({point_json(a), point_json(b)});
    } else {
        throw parse_error("specify the map: --coeffs (8 reals), --ta, or --tab");
    }
    const Metric metric =
        metric_name == "chordal" ? Metric::chordal : Metric::euclidean;
    const std::uint64_t budget =
        c.budget ? c.budget : (metric == Metric::chordal ? 16384 : 4096);
    inputs["metric"] = metric_name;

    ordered_json res;
    res["map"] = map_json(m);
    res["metric"] = metric_name;
    res["derivative_sup"] = estimate_json(estimate_lipschitz(
        m, metric, LipMethod::derivative_sup, budget, c.seed));
    res["pair_sampling"] = estimate_json(estimate_lipschitz(
        m, metric, LipMethod::pair_sampling, budget, c.seed));
    if (analytic > 0.0) res["analytic"] = analytic;
    return emit("lipschitz", inputs, c, budget, res);
}

int run_conjecture(const Common& c, double step, double rmax) {
    if (!(step > 0.0) || !(rmax > 0.0) || rmax > 0.95)
        throw parse_error("conjecture grid needs step > 0 and 0 < rmax <= 0.95");
    const std::uint64_t budget = c.budget ? c.budget : 16384;
    const ConjectureSweep sweep =
        conjecture_sweep(conjecture_default_grid(step, rmax), budget, c.seed);

    ordered_json res;
    res["step"] = step;
    res["rmax"] = rmax;
    res["points"] = static_cast<std::uint64_t>(sweep.rows.size());
    ordered_json rows = ordered_json::array();
    for (const ConjectureRow& row : sweep.rows) {
        ordered_json r;
        r["a"] = cplx_json(row.a);
        r["analytic"] = row.analytic;
        r["empirical"] = row.empirical;
        r["gap"] = row.gap;
        rows.push_back(std::move(r));
    }
    res["rows"] = std::move(rows);
    res["max_gap"] = sweep.max_gap;

    ordered_json inputs;
    inputs["step"] = step;
    inputs["rmax"] = rmax;
    return emit("conjecture", inputs, c, budget, res);
}

int run_figure(const Common& c, const std::string& name,
               const std::map<std::string, std::string>& inline_pts,
               const std::vector<double>& angles) {
    const auto pts = load_points(c, inline_pts);
    ordered_json inputs;
    inputs["name"] = name;
    std::string svg;
    if (name == "fig4") {
        std::array<double, 4> t{0.0, 0.3, 1.5, 2.1};
        if (!angles.empty())
            for (int i = 0; i < 4; ++i) t[static_cast<std::size_t>(i)] = angles[static_cast<std::size_t>(i)];
        svg = render_figure4(t);
        inputs["angles"] = ordered_json::array({t[0], t[1], t[2], t[3]});
    } else {
        cplx a(0.0, -0.7), b(0.5, 0.0);
        if (name != "fig1") {
            a = cplx(0.0, -0.9);
            b = cplx(0.5, -0.3);
        }
        if (pts.count("a")) a = need_finite(pts, "a");
        if (pts.count("b")) b = need_finite(pts, "b");
        svg = name == "fig1"   ? render_figure1(a, b)
              : name == "fig2" ? render_figure2(a, b)
                               : render_figure3(a, b);
        inputs["a"] = cplx_json(a);
        inputs["b"] = cplx_json(b);
    }
    const std::string out_path = c.out.empty() ? name + ".svg" : c.out;
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw parse_error("cannot open output file: " + out_path);
    f << svg;
    f.close();

    ordered_json doc;
    doc["figure"] = name;
    doc["out"] = out_path;
    doc["manifest"] = run_manifest("figure", std::move(inputs), c.seed, 0, svg);
    std::cout << (c.format == "text" ? render_text(doc) : dump_json(doc));
    return 0;
}

int emit_error(const char* code, const std::string& message, int exit_code) {
    ordered_json doc;
    doc["error"]["code"] = code;
    doc["error"]["message"] = message;
    std::cout << dump_json(doc);
    return exit_code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Moebius symmetrization toolkit: point-pair and quadruple "
                 "normalizations on the extended plane with exact and "
                 "empirical Lipschitz constants"};
    app.require_subcommand(1);

    Common c_sym, c_norm, c_quad, c_lip, c_conj, c_fig;
    std::map<std::string, std::string> pts_sym, pts_norm, pts_fig;
    std::string norm_mode, quad_method, lip_metric = "euclidean", fig_name;
    std::vector<double> quad_angles, lip_coeffs, fig_angles;
    std::vector<std::string> lip_tab;
    std::string lip_ta;
    bool lip_reversing = false;
    double conj_step = 0.05, conj_rmax = 0.95;

    CLI::App* sym = app.add_subcommand(
        "symmetrize", "map a quadruple (a,b,c,d) onto (-1, y, -y, 1)");
    add_common(sym, c_sym);
    for (const char* n : {"a", "b", "c", "d"})
        sym->add_option(std::string("--") + n, pts_sym[n],
                        std::string("point ") + n + " as [re,im]");

    CLI::App* norm = app.add_subcommand(
        "normalize", "move a disk pair (a,b) into a special position");
    add_common(norm, c_norm);
    norm->add_option("--mode", norm_mode, "target position")
        ->required()
        ->check(CLI::IsMember({"antipodal", "collinear", "equinorm"}));
    for (const char* n : {"a", "b"})
        norm->add_option(std::string("--") + n, pts_norm[n],
                         std::string("point ") + n + " as [re,im]");

    CLI::App* quad = app.add_subcommand(
        "circle-quad", "symmetrize four unit-circle points given by angles");
    add_common(quad, c_quad);
    quad->add_option("--angles", quad_angles, "four angles in radians, positive order")
        ->required()
        ->expected(4);
    quad->add_option("--method", quad_method, "symmetrization method (default: both)")
        ->check(CLI::IsMember({"reflection", "antipodal"}));

    CLI::App* lip = app.add_subcommand(
        "lipschitz", "estimate the Lipschitz constant of a Moebius map");
    add_common(lip, c_lip);
    lip->add_option("--coeffs", lip_coeffs, "a_re a_im b_re b_im c_re c_im d_re d_im")
        ->expected(8);
    lip->add_flag("--reversing", lip_reversing, "conjugate the input first");
    lip->add_option("--ta", lip_ta, "disk automorphism parameter as [re,im]");
    lip->add_option("--tab", lip_tab, "disk pair-map parameters, two points")
        ->expected(2)
        // keep "[re,im]" tokens whole; extra-args mode would split them on commas
        ->allow_extra_args(false);
    lip->add_option("--metric", lip_metric, "metric to measure distortion in")
        ->check(CLI::IsMember({"euclidean", "chordal"}));

    CLI::App* conj = app.add_subcommand(
        "conjecture", "compare chordal estimates of Lip(T_a) with (1+|a|)/(1-|a|)");
    add_common(conj, c_conj);
    conj->add_option("--step", conj_step, "grid step");
    conj->add_option("--rmax", conj_rmax, "grid radius bound (max 0.95)");

    CLI::App* fig = app.add_subcommand("figure", "render a construction as SVG");
    add_common(fig, c_fig);
    fig->add_option("name", fig_name, "which construction to draw")
        ->required()
        ->check(CLI::IsMember({"fig1", "fig2", "fig3", "fig4"}));
    for (const char* n : {"a", "b"})
        fig->add_option(std::string("--") + n, pts_fig[n],
                        std::string("point ") + n + " as [re,im]");
    fig->add_option("--angles", fig_angles, "four angles for fig4")->expected(4);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return emit_error("usage", e.what(), 2);
    }

    try {
        if (sym->parsed()) return run_symmetrize(c_sym, pts_sym);
        if (norm->parsed()) return run_normalize(c_norm, norm_mode, pts_norm);
        if (quad->parsed()) return run_circle_quad(c_quad, quad_angles, quad_method);
        if (lip->parsed())
            return run_lipschitz(c_lip, lip_coeffs, lip_reversing, lip_ta,
                                 lip_tab, lip_metric);
        if (conj->parsed()) return run_conjecture(c_conj, conj_step, conj_rmax);
        if (fig->parsed()) return run_figure(c_fig, fig_name, pts_fig, fig_angles);
    } catch (const parse_error& e) {
        return emit_error("parse", e.what(), 2);
    } catch (const degeneracy_error& e) {
        return emit_error("degeneracy", e.what(), 1);
    } catch (const domain_error& e) {
        return emit_error("domain", e.what(), 1);
    }
    return emit_error("usage", "no subcommand given", 2);
}
