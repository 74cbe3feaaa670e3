#include "scalar/fixture.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "scalar/jsonfmt.hpp"

namespace scalar {

using nlohmann::json;

std::string format_number(double x) {
    if (x == 0.0) return "0";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    std::string s = buf;
    if (s == "-0") return "0";
    return s;
}

namespace {

void dump(const json& j, std::string& out, int indent) {
    const std::string pad(indent, ' ');
    switch (j.type()) {
        case json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += "{\n";
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) out += ",\n";
                first = false;
                out += pad + "  " + json(it.key()).dump() + ": ";
                dump(it.value(), out, indent + 2);
            }
            out += "\n" + pad + "}";
            return;
        }
        case json::value_t::array: {
            bool flat = true;
            for (const auto& e : j) flat = flat && !e.is_structured();
            if (j.empty() || flat) {
                out += "[";
                for (std::size_t i = 0; i < j.size(); ++i) {
                    if (i) out += ", ";
                    dump(j[i], out, indent);
                }
                out += "]";
                return;
            }
            out += "[\n";
            for (std::size_t i = 0; i < j.size(); ++i) {
                if (i) out += ",\n";
                out += pad + "  ";
                dump(j[i], out, indent + 2);
            }
            out += "\n" + pad + "]";
            return;
        }
        case json::value_t::number_float:
            out += format_number(j.get<double>());
            return;
        default:
            out += j.dump();
            return;
    }
}

Vec read_vec(const json& j, int dim, const std::string& where) {
    if (!j.is_array()) throw FixtureError(where + ": expected an array of numbers");
    if (static_cast<int>(j.size()) != dim) {
        throw FixtureError(where + ": expected " + std::to_string(dim) + " coordinates, got " + std::to_string(j.size()));
    }
    Vec v(dim);
    for (int i = 0; i < dim; ++i) {
        if (!j[i].is_number()) throw FixtureError(where + ": coordinate is not a number");
        v[i] = j[i].get<double>();
        if (!std::isfinite(v[i])) throw FixtureError(where + ": coordinate is not finite");
    }
    return v;
}

std::vector<Vec> read_vecs(const json& j, int dim, const std::string& where) {
    if (!j.is_array() || j.empty()) throw FixtureError(where + ": expected a nonempty array of points");
    std::vector<Vec> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(read_vec(j[i], dim, where + "[" + std::to_string(i) + "]"));
    return out;
}

void only_keys(const json& j, std::initializer_list<const char*> allowed, const std::string& where) {
    if (!j.is_object()) throw FixtureError(where + ": expected an object");
    const std::set<std::string> ok(allowed.begin(), allowed.end());
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (!ok.count(it.key())) throw FixtureError(where + ": unknown key \"" + it.key() + "\"");
    }
}

std::string read_name(const json& j, const std::string& where) {
    if (!j.is_string()) throw FixtureError(where + ": expected a polytope name");
    return j.get<std::string>();
}

}  // namespace

std::string emit_json(const json& j) {
    std::string out;
    dump(j, out, 0);
    out += "\n";
    return out;
}

json to_json(const Vec& v) {
    json a = json::array();
    for (int i = 0; i < v.size(); ++i) a.push_back(v[i]);
    return a;
}

json to_json(const std::vector<Vec>& vs) {
    json a = json::array();
    for (const auto& v : vs) a.push_back(to_json(v));
    return a;
}

Fixture parse_fixture(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw FixtureError(std::string("invalid JSON: ") + e.what());
    }
    only_keys(j, {"dim", "cone", "polytopes", "functionals", "seed", "samples", "tolerances"}, "fixture");
    Fixture fx;
    if (!j.contains("dim") || !j["dim"].is_number_integer() || j["dim"].get<int>() < 1) {
        throw FixtureError("fixture: \"dim\" must be a positive integer");
    }
    fx.dim = j["dim"].get<int>();

    if (j.contains("cone")) {
        const json& c = j["cone"];
        only_keys(c, {"rays", "halfspaces"}, "cone");
        if (c.size() != 1) throw FixtureError("cone: give exactly one of \"rays\" or \"halfspaces\"");
        const std::string kind = c.begin().key();
        fx.cone = ConeSpec{kind, read_vecs(c[kind], fx.dim, "cone." + kind)};
    }
    if (j.contains("polytopes")) {
        const json& ps = j["polytopes"];
        if (!ps.is_object()) throw FixtureError("polytopes: expected an object");
        for (auto it = ps.begin(); it != ps.end(); ++it) {
            const std::string where = "polytopes." + it.key();
            only_keys(it.value(), {"vertices"}, where);
            if (!it.value().contains("vertices")) throw FixtureError(where + ": missing \"vertices\"");
            fx.polytopes[it.key()] = read_vecs(it.value()["vertices"], fx.dim, where + ".vertices");
        }
    }
    if (j.contains("functionals")) {
        const json& fs = j["functionals"];
        if (!fs.is_object()) throw FixtureError("functionals: expected an object");
        for (auto it = fs.begin(); it != fs.end(); ++it) {
            const std::string where = "functionals." + it.key();
            const json& f = it.value();
            only_keys(f, {"variant", "r", "ball", "G", "H"}, where);
            FunctionalSpec spec;
            if (!f.contains("variant") || !f["variant"].is_string()) throw FixtureError(where + ": missing \"variant\"");
            spec.variant = f["variant"].get<std::string>();
            auto need_poly = [&](const char* key) {
                if (!f.contains(key)) throw FixtureError(where + ": missing \"" + key + "\"");
                const std::string name = read_name(f[key], where + "." + key);
                if (!fx.polytopes.count(name)) throw FixtureError(where + ": unknown polytope \"" + name + "\"");
                return name;
            };
            if (spec.variant == "GW") {
                only_keys(f, {"variant", "r"}, where);
                if (!f.contains("r")) throw FixtureError(where + ": missing \"r\"");
                spec.r = read_vec(f["r"], fx.dim, where + ".r");
            } else if (spec.variant == "HU") {
                only_keys(f, {"variant", "ball"}, where);
                if (f.contains("ball")) spec.ball = need_poly("ball");
            } else if (spec.variant == "DS") {
                only_keys(f, {"variant", "G"}, where);
                spec.G = need_poly("G");
            } else if (spec.variant == "QD") {
                only_keys(f, {"variant", "G", "H"}, where);
                spec.G = need_poly("G");
                spec.H = need_poly("H");
            } else {
                throw FixtureError(where + ": unknown variant \"" + spec.variant + "\"");
            }
            fx.functionals[it.key()] = std::move(spec);
        }
    }
    if (j.contains("seed")) {
        if (!j["seed"].is_number_unsigned()) throw FixtureError("seed: expected a nonnegative integer");
        fx.seed = j["seed"].get<std::uint64_t>();
    }
    if (j.contains("samples")) {
        if (!j["samples"].is_number_integer() || j["samples"].get<long long>() < 1) {
            throw FixtureError("samples: expected a positive integer");
        }
        fx.samples = j["samples"].get<int>();
    }
    if (j.contains("tolerances")) {
        const json& t = j["tolerances"];
        only_keys(t, {"eps_feas", "eps_cmp", "eps_strict"}, "tolerances");
        for (auto it = t.begin(); it != t.end(); ++it) {
            if (!it.value().is_number()) throw FixtureError("tolerances." + it.key() + ": expected a number");
            fx.tolerances[it.key()] = it.value().get<double>();
        }
        if (!fx.apply_tolerances(Tolerances{}).valid()) {
            throw FixtureError("tolerances: need 0 < eps_feas < eps_strict < 1");
        }
    }
    return fx;
}

Fixture load_fixture(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FixtureError("cannot read fixture " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_fixture(ss.str());
}

std::string emit_fixture(const Fixture& fx) {
    json j = json::object();
    j["dim"] = fx.dim;
    if (fx.cone) j["cone"] = {{fx.cone->kind, to_json(fx.cone->vectors)}};
    if (!fx.polytopes.empty()) {
        json ps = json::object();
        for (const auto& [name, verts] : fx.polytopes) ps[name] = {{"vertices", to_json(verts)}};
        j["polytopes"] = ps;
    }
    if (!fx.functionals.empty()) {
        json fs = json::object();
        for (const auto& [name, f] : fx.functionals) {
            json o = {{"variant", f.variant}};
            if (f.r) o["r"] = to_json(*f.r);
            if (f.ball) o["ball"] = *f.ball;
            if (f.G) o["G"] = *f.G;
            if (f.H) o["H"] = *f.H;
            fs[name] = o;
        }
        j["functionals"] = fs;
    }
    if (fx.seed) j["seed"] = *fx.seed;
    if (fx.samples) j["samples"] = *fx.samples;
    if (!fx.tolerances.empty()) {
        json t = json::object();
        for (const auto& [k, v] : fx.tolerances) t[k] = v;
        j["tolerances"] = t;
    }
    return emit_json(j);
}

PolyCone Fixture::ordering_cone() const {
    if (!cone) return PolyCone::orthant(dim);
    if (cone->kind == "rays") return PolyCone::from_rays(dim, cone->vectors);
    return PolyCone::from_halfspaces(dim, cone->vectors);
}

Polytope Fixture::polytope(const std::string& name) const {
    const auto it = polytopes.find(name);
    if (it == polytopes.end()) throw FixtureError("fixture has no polytope \"" + name + "\"");
    return hull(it->second);
}

ScalFun Fixture::functional(const std::string& name) const {
    const auto it = functionals.find(name);
    if (it == functionals.end()) throw FixtureError("fixture has no functional \"" + name + "\"");
    const FunctionalSpec& f = it->second;
    if (f.variant == "GW") return GW{ordering_cone(), *f.r};
    if (f.variant == "HU") {
        HU hu{ordering_cone(), std::nullopt};
        if (f.ball) hu.ball = polytope(*f.ball);
        return hu;
    }
    if (f.variant == "DS") return DS{polytope(*f.G)};
    return QD{polytope(*f.G), polytope(*f.H)};
}

Tolerances Fixture::apply_tolerances(Tolerances base) const {
    for (const auto& [k, v] : tolerances) {
        if (k == "eps_feas") base.eps_feas = v;
        if (k == "eps_cmp") base.eps_cmp = v;
        if (k == "eps_strict") base.eps_strict = v;
    }
    return base;
}

}  // namespace scalar
