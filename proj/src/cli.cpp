#include "scalar/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "scalar/fixture.hpp"
#include "scalar/jsonfmt.hpp"
#include "scalar/pairs.hpp"
#include "scalar/plot.hpp"
#include "scalar/suites.hpp"

namespace scalar::cli {

namespace {

using nlohmann::json;

struct Unsupported : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A check that ran and failed; the message names what failed.
struct Violation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Flags {
    std::string fixture;
    std::optional<std::uint64_t> seed;
    std::optional<int> samples;
    std::optional<double> tol;
};

Fixture need_fixture(const Flags& fl) {
    if (fl.fixture.empty()) throw FixtureError("--fixture is required");
    return load_fixture(fl.fixture);
}

std::string choose_functional(const Fixture& fx, const std::string& name) {
    if (!name.empty()) return name;
    if (fx.functionals.size() == 1) return fx.functionals.begin()->first;
    throw FixtureError("fixture has " + std::to_string(fx.functionals.size()) +
                       " functionals; choose one with --functional");
}

Vec to_vec(const std::vector<double>& xs, int dim, const char* what) {
    if (static_cast<int>(xs.size()) != dim) {
        throw FixtureError(std::string(what) + " has " + std::to_string(xs.size()) + " coordinates, fixture dim is " +
                           std::to_string(dim));
    }
    return Eigen::Map<const Vec>(xs.data(), dim);
}

Vec choose_r(const Fixture& fx, const std::vector<double>& r_flag) {
    if (!r_flag.empty()) return to_vec(r_flag, fx.dim, "--r");
    for (const auto& [name, f] : fx.functionals) {
        if (f.variant == "GW") return *f.r;
    }
    throw FixtureError("no direction r: pass --r or add a GW functional to the fixture");
}

json polytope_json(const Polytope& P) { return to_json(P.vertices()); }

json report_json(const PairReport& rep) {
    json j;
    j["cond_faces"] = {{"verdict", to_string(rep.cond_faces.verdict)}};
    if (rep.cond_faces.witness) j["cond_faces"]["witness"] = to_json(*rep.cond_faces.witness);
    j["cond_disjoint"] = {{"verdict", to_string(rep.cond_disjoint.verdict)}};
    if (rep.cond_disjoint.verdict == Verdict::Pass) {
        j["cond_disjoint"]["separator"] = to_json(rep.cond_disjoint.separator);
        j["cond_disjoint"]["gap"] = rep.cond_disjoint.gap;
    }
    if (rep.cond_disjoint.common) j["cond_disjoint"]["common_point"] = to_json(*rep.cond_disjoint.common);
    j["cond_repr"] = {{"verdict", to_string(rep.cond_repr.verdict)}};
    if (rep.cond_repr.witness) j["cond_repr"]["witness"] = to_json(*rep.cond_repr.witness);
    j["is_ds"] = {{"yes", rep.is_ds.yes}};
    if (rep.is_ds.D) j["is_ds"]["D"] = polytope_json(*rep.is_ds.D);
    j["convexity"] = {{"convex", rep.convexity.convex}, {"margin", rep.convexity.margin}};
    if (!rep.convexity.convex) {
        j["convexity"]["y1"] = to_json(rep.convexity.y1);
        j["convexity"]["y2"] = to_json(rep.convexity.y2);
    }
    j["valid"] = rep.valid();
    return j;
}

int cmd_eval(const Flags& fl, const std::string& fname, const std::vector<double>& point, std::ostream& out) {
    const Fixture fx = need_fixture(fl);
    const ScalFun f = fx.functional(choose_functional(fx, fname));
    validate(f);
    out << format_number(eval(f, to_vec(point, fx.dim, "--point"))) << "\n";
    return kPass;
}

int cmd_check_pair(const Flags& fl, const std::string& g, const std::string& h, std::ostream& out) {
    const Fixture fx = need_fixture(fl);
    const PairReport rep = validate_pair(fx.polytope(g), fx.polytope(h), fx.ordering_cone());
    out << "cond_faces: " << to_string(rep.cond_faces.verdict) << "\n";
    out << "cond_disjoint: " << to_string(rep.cond_disjoint.verdict) << "\n";
    out << "cond_repr: " << to_string(rep.cond_repr.verdict) << "\n";
    out << "is_ds: " << (rep.is_ds.yes ? "yes" : "no") << "\n";
    out << "convexity: " << (rep.convexity.convex ? "convex" : "nonconvex") << "\n";
    out << "valid: " << (rep.valid() ? "yes" : "no") << "\n";
    out << emit_json(report_json(rep));
    if (rep.valid()) return kPass;
    std::string failed;
    if (!(rep.cond_faces.verdict == FaceVerdict::Holds || rep.cond_faces.verdict == FaceVerdict::HoldsSampled)) {
        failed += " cond_faces";
    }
    if (rep.cond_disjoint.verdict != Verdict::Pass) failed += " cond_disjoint";
    if (rep.cond_repr.verdict != Verdict::Pass) failed += " cond_repr";
    throw Violation("scalarization pair conditions failed:" + failed);
}

int cmd_dual_cone(const Flags& fl, std::ostream& out) {
    const Fixture fx = need_fixture(fl);
    const PolyCone K = fx.ordering_cone();
    const PolyCone Kd = dual_cone(K);
    auto cone_json = [](const PolyCone& C) {
        return json{{"rays", to_json(C.rays())}, {"facets", to_json(C.facets())},
                    {"pointed", C.pointed()}, {"solid", C.solid()}};
    };
    out << emit_json({{"cone", cone_json(K)}, {"dual", cone_json(Kd)}});
    return kPass;
}

int cmd_relations(const Flags& fl, const std::string& g, const std::string& h, const std::string& tag,
                  const std::string& strictness, const std::string& order, std::ostream& out) {
    const Fixture fx = need_fixture(fl);
    const Polytope G = fx.polytope(g), H = fx.polytope(h);
    const PolyCone K = fx.ordering_cone();
    const PolyCone D = order == "cone" ? K : dual_cone(K);
    RelationKind kind;
    kind.tag = tag == "lower" ? RelTag::Lower : tag == "upper" ? RelTag::Upper : RelTag::Set;
    kind.strictness = strictness == "punctured" ? Strictness::Punctured
                      : strictness == "interior" ? Strictness::Interior
                                                 : Strictness::Weak;
    json j;
    j["kind"] = tag;
    j["strictness"] = strictness;
    j["order"] = order;
    j["relate"] = to_string(relate(H, G, D, kind));
    const FaceRelation fr = y_face_relation_all(G, H, D, kind);
    j["faces"] = {{"verdict", to_string(fr.verdict)}};
    if (fr.witness) j["faces"]["witness"] = to_json(*fr.witness);
    if (D.pointed()) {
        j["minimal_G"] = to_json(minimal_elements(G, D));
        j["minimal_H"] = to_json(minimal_elements(H, D));
    }
    out << emit_json(j);
    return kPass;
}

int cmd_construct_1d(const std::vector<double>& abcd, std::ostream& out) {
    const auto [G, H] = build_nonconvex_pair_1d(abcd[0], abcd[1], abcd[2], abcd[3]);
    const QD f{G, H};
    const Vec one = Vec::Ones(1);
    const Sandwich sw = dual_sandwich_check(G, H, PolyCone::orthant(1));
    json j;
    j["G"] = polytope_json(G);
    j["H"] = polytope_json(H);
    j["valid"] = true;
    j["is_ds"] = false;
    j["midpoint_violation"] = eval(f, Vec::Zero(1)) - 0.5 * (eval(f, one) + eval(f, -one));
    j["mp_subdiff"] = polytope_json(mp_subdiff0(G, H).hull);
    j["dh_empty"] = sw.dh_empty;
    j["sandwich"] = {{"lower_holds", sw.lower_holds}, {"upper_holds", sw.upper_holds},
                     {"lower_equal", sw.lower_equal}, {"upper_equal", sw.upper_equal}};
    out << emit_json(j);
    return kPass;
}

int cmd_construct_2d(const Flags& fl, const std::vector<double>& r_flag, std::ostream& out) {
    const Fixture fx = need_fixture(fl);
    const PolyCone K = fx.ordering_cone();
    const Construction2d c = build_nonconvex_pair_2d(K, choose_r(fx, r_flag));
    json j;
    j["G"] = polytope_json(c.G);
    j["H"] = polytope_json(c.H);
    j["B"] = polytope_json(c.B);
    j["H_tilde"] = polytope_json(c.H_tilde);
    j["p_star"] = to_json(c.p_star);
    j["eps"] = c.eps;
    j["M"] = c.M;
    j["beta"] = c.beta;
    j["gamma"] = c.gamma;
    j["violation"] = {{"y1", to_json(c.violation.y1)}, {"y2", to_json(c.violation.y2)},
                      {"margin", c.violation.margin}};
    j["valid"] = true;
    j["is_ds"] = false;
    out << emit_json(j);
    return kPass;
}

int cmd_report(const Flags& fl, const std::string& suite, std::ostream& out) {
    suites::Options opt;
    if (!fl.fixture.empty()) {
        const Fixture fx = load_fixture(fl.fixture);
        if (fx.seed) opt.seed = *fx.seed;
        if (fx.samples) opt.samples = fx.samples;
    }
    if (fl.seed) opt.seed = *fl.seed;
    if (fl.samples) opt.samples = fl.samples;
    const auto results = suites::run_suite(suite, opt);
    out << "suite " << suite << " (seed " << opt.seed << ")\n";
    int passed = 0;
    for (const auto& c : results) {
        char line[128];
        std::snprintf(line, sizeof line, "%3d  %-4s  value %-12s bound %-8s ", c.id, c.pass ? "PASS" : "FAIL",
                      format_number(c.worst).c_str(), format_number(c.bound).c_str());
        out << line << c.name << ": " << c.detail << "\n";
        passed += c.pass;
    }
    out << passed << "/" << results.size() << " passed\n";
    if (passed != static_cast<int>(results.size())) throw Violation("suite " + suite + " has failing criteria");
    return kPass;
}

int cmd_plot(const Flags& fl, const std::string& path, bool construct, const std::string& fname,
             const std::vector<double>& r_flag, std::ostream& out) {
    const Fixture fx = need_fixture(fl);
    if (fx.dim != 2) throw Unsupported("plot needs dim = 2, fixture has dim " + std::to_string(fx.dim));
    PlotScene scene;
    scene.K = fx.ordering_cone();
    if (construct) {
        const Construction2d c = build_nonconvex_pair_2d(scene.K, choose_r(fx, r_flag));
        scene.title = "nonconvex scalarization pair";
        scene.G = c.G;
        scene.H = c.H;
        scene.B = c.B;
        scene.p_star = c.p_star;
        scene.psi = [G = c.G, H = c.H](const Vec& y) { return G.support_value(y) - H.support_value(y); };
    } else {
        if (fx.polytopes.count("G")) scene.G = fx.polytope("G");
        if (fx.polytopes.count("H")) scene.H = fx.polytope("H");
        for (const auto& [name, f] : fx.functionals) {
            if (f.variant == "GW") {
                scene.B = gw_subdiff0(scene.K, *f.r);
                break;
            }
        }
        ScalFun f;
        if (!fname.empty() || fx.functionals.size() == 1) {
            const std::string name = choose_functional(fx, fname);
            f = fx.functional(name);
            scene.title = name;
        } else if (scene.G && scene.H) {
            f = QD{*scene.G, *scene.H};
            scene.title = "sigma_G - sigma_H";
        } else {
            throw FixtureError("nothing to plot: choose a functional with --functional");
        }
        validate(f);
        scene.psi = [f](const Vec& y) { return eval(f, y); };
    }
    std::ofstream file(path);
    if (!file) throw FixtureError("cannot write " + path);
    file << render_svg(scene);
    out << "wrote " << path << "\n";
    return kPass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Scalarizing functionals over polyhedral cones", args.empty() ? "scalarctl" : args[0]};
    app.require_subcommand(1);
    app.fallthrough();

    Flags fl;
    app.add_option("--fixture", fl.fixture, "fixture JSON file");
    app.add_option("--seed", fl.seed, "random seed for sampled checks");
    app.add_option("--samples", fl.samples, "samples per instance")->check(CLI::PositiveNumber);
    app.add_option("--tol", fl.tol, "value-comparison slack eps_cmp")->check(CLI::Range(1e-15, 0.5));

    std::string fname, gname = "G", hname = "H", tag = "set", strictness = "weak", order = "dual", suite, out_path;
    std::vector<double> point, r_flag, abcd;
    bool construct_flag = false;

    auto* eval_cmd = app.add_subcommand("eval", "evaluate a functional at a point");
    eval_cmd->add_option("--functional", fname, "functional name in the fixture");
    eval_cmd->add_option("--point", point, "comma-separated coordinates")->delimiter(',')->required();

    auto* check_cmd = app.add_subcommand("check-pair", "validate [G, H] as a scalarization pair");
    check_cmd->add_option("--G", gname, "polytope name for G");
    check_cmd->add_option("--H", hname, "polytope name for H");

    auto* dual_cmd = app.add_subcommand("dual-cone", "print the fixture cone and its dual");

    auto* rel_cmd = app.add_subcommand("relations", "set relations between H and G");
    rel_cmd->add_option("--G", gname, "polytope name for G");
    rel_cmd->add_option("--H", hname, "polytope name for H");
    rel_cmd->add_option("--kind", tag, "lower, upper or set")->check(CLI::IsMember({"lower", "upper", "set"}));
    rel_cmd->add_option("--strictness", strictness, "weak, punctured or interior")
        ->check(CLI::IsMember({"weak", "punctured", "interior"}));
    rel_cmd->add_option("--order", order, "order by the dual cone (default) or the cone itself")
        ->check(CLI::IsMember({"dual", "cone"}));

    auto* con_cmd = app.add_subcommand("construct", "build a nonconvex scalarization pair");
    con_cmd->require_subcommand(1);
    auto* con1 = con_cmd->add_subcommand("1d", "G = [a, b], H = [c, d]");
    con1->add_option("endpoints", abcd, "a b c d")->expected(4)->required()->allow_extra_args(false);
    auto* con2 = con_cmd->add_subcommand("2d", "planar construction from the fixture cone and r");
    con2->add_option("--r", r_flag, "interior direction r")->delimiter(',');

    auto* rep_cmd = app.add_subcommand("report", "run an acceptance suite");
    rep_cmd->add_option("suite", suite, "inclusions, sandwich, axioms or constructions")
        ->required()
        ->check(CLI::IsMember(suites::suite_names()));

    auto* plot_cmd = app.add_subcommand("plot", "write an SVG of a planar fixture");
    plot_cmd->add_option("--out", out_path, "output SVG path")->required();
    plot_cmd->add_flag("--construct", construct_flag, "plot the nonconvex construction for the fixture cone");
    plot_cmd->add_option("--functional", fname, "functional whose level lines are drawn");
    plot_cmd->add_option("--r", r_flag, "interior direction r for --construct")->delimiter(',');

    auto* norm_cmd = app.add_subcommand("normalize", "print the fixture in normalized form");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    if (!rev.empty()) rev.pop_back();
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kPass : kParseError;
    }

    try {
        Tolerances t = tol();
        if (!fl.fixture.empty()) t = load_fixture(fl.fixture).apply_tolerances(t);
        if (fl.tol) t.eps_cmp = *fl.tol;
        if (!t.valid()) throw FixtureError("tolerances: need 0 < eps_feas < eps_strict < 1");
        ScopedTolerances scoped(t);

        if (eval_cmd->parsed()) return cmd_eval(fl, fname, point, out);
        if (check_cmd->parsed()) return cmd_check_pair(fl, gname, hname, out);
        if (dual_cmd->parsed()) return cmd_dual_cone(fl, out);
        if (rel_cmd->parsed()) return cmd_relations(fl, gname, hname, tag, strictness, order, out);
        if (con1->parsed()) return cmd_construct_1d(abcd, out);
        if (con2->parsed()) return cmd_construct_2d(fl, r_flag, out);
        if (rep_cmd->parsed()) return cmd_report(fl, suite, out);
        if (plot_cmd->parsed()) return cmd_plot(fl, out_path, construct_flag, fname, r_flag, out);
        if (norm_cmd->parsed()) {
            out << emit_fixture(need_fixture(fl));
            return kPass;
        }
    } catch (const FixtureError& e) {
        err << "parse error: " << e.what() << "\n";
        return kParseError;
    } catch (const Unsupported& e) {
        err << "unsupported: " << e.what() << "\n";
        return kUnsupported;
    } catch (const Violation& e) {
        err << "invariant violated: " << e.what() << "\n";
        return kInvariant;
    } catch (const Error& e) {
        err << "invariant violated: " << e.what() << "\n";
        return kInvariant;
    }
    return kParseError;
}

}  // namespace scalar::cli
