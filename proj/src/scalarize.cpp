#include "scalar/scalarize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

namespace scalar {

namespace {

int dim_of(const ScalFun& f) {
    return std::visit(
        [](const auto& v) -> int {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, GW> || std::is_same_v<T, HU>) return v.K.dim();
            else return v.G.dim();
        },
        f);
}

double eval_gw(const GW& f, const Vec& y) {
    LpProblem lp;
    lp.objective = Vec::Ones(1);
    for (const auto& a : f.K.facets()) {
        Vec row(1);
        row << -a.dot(f.r);
        lp.add_le(row, -a.dot(y));
    }
    const LpResult res = solve_lp(lp);
    if (!res.optimal()) throw RNotInterior("Gerstewitz LP has no optimum; r is not interior to K");
    return res.value;
}

double eval_hu(const HU& f, const Vec& y) {
    const PolyCone negK = f.K.negated();
    const bool inside = negK.contains(y);
    if (!f.ball) {
        const double d_out = (y - project_cone(y, negK)).norm();
        if (!inside) return d_out;
        // Nearest point of the complement lies on a facet hyperplane.
        double d_in = std::numeric_limits<double>::infinity();
        for (const auto& a : negK.facets()) d_in = std::min(d_in, std::abs(a.dot(y)));
        return d_out - d_in;
    }
    const Polytope& B = *f.ball;
    const double d_out = dist_polyhedral_norm(y, negK, B);
    if (!inside) return d_out;
    double d_in = std::numeric_limits<double>::infinity();
    for (const auto& a : negK.facets()) {
        const PolyCone plane = PolyCone::from_halfspaces(f.K.dim(), {a, Vec(-a)});
        d_in = std::min(d_in, dist_polyhedral_norm(y, plane, B));
    }
    return d_out - d_in;
}

Vec interior_direction(const PolyCone& K) {
    Vec c = Vec::Zero(K.dim());
    for (const auto& r : K.rays()) c += r;
    if (c.norm() > 1e-12) c.normalize();
    return c;
}

}  // namespace

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::Unknown: return "unknown";
    }
    return "unknown";
}

void validate(const ScalFun& f) {
    std::visit(
        [](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, GW>) {
                if (v.r.size() != v.K.dim()) throw DimensionMismatch("GW: r");
                if (membership(v.K, v.r) != Membership::Interior) throw RNotInterior("GW: r is not interior to K");
            } else if constexpr (std::is_same_v<T, HU>) {
                if (!v.K.solid()) throw NotSolid("HU: K is not solid");
                if (v.ball && v.ball->dim() != v.K.dim()) throw DimensionMismatch("HU: ball");
            } else if constexpr (std::is_same_v<T, QD>) {
                if (v.G.dim() != v.H.dim()) throw DimensionMismatch("QD: G and H");
            }
        },
        f);
}

double eval(const ScalFun& f, const Vec& y) {
    if (y.size() != dim_of(f)) throw DimensionMismatch("eval: point dimension");
    return std::visit(
        [&](const auto& v) -> double {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, GW>) return eval_gw(v, y);
            else if constexpr (std::is_same_v<T, HU>) return eval_hu(v, y);
            else if constexpr (std::is_same_v<T, DS>) return v.G.support_value(y);
            else return v.G.support_value(y) - v.H.support_value(y);
        },
        f);
}

Polytope gw_subdiff0(const PolyCone& K, const Vec& r) {
    if (r.size() != K.dim()) throw DimensionMismatch("gw_subdiff0");
    if (membership(K, r) != Membership::Interior) throw RNotInterior("r is not interior to K");
    // Extreme rays of K* are the facet normals of K.
    std::vector<Vec> pts;
    for (const auto& rho : K.facets()) pts.push_back(rho / rho.dot(r));
    return hull(pts);
}

double hu_sigma(const PolyCone& K, const Vec& y) {
    if (!K.solid()) throw NotSolid("hu_sigma needs a solid cone");
    const PolyCone Kd = dual_cone(K);
    const Vec p = project_cone(y, Kd);
    const double np = p.norm();
    if (np > tol().eps_feas) return np;
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& rho : Kd.rays()) best = std::max(best, rho.dot(y));
    return best;
}

Polytope gw_norm_ball(const PolyCone& K, const Vec& r) {
    if (r.size() != K.dim()) throw DimensionMismatch("gw_norm_ball");
    if (!K.pointed()) throw UnboundedInterval("K is not pointed");
    if (membership(K, r) != Membership::Interior) throw RNotInterior("r is not interior to K");
    std::vector<Halfspace> hs;
    for (const auto& a : K.facets()) {
        hs.push_back({a, a.dot(r)});
        hs.push_back({-a, a.dot(r)});
    }
    MaybePolytope I = from_halfspaces(K.dim(), hs);
    if (!I) throw UnboundedInterval("empty order interval");
    return *I;
}

AxiomReport axiom_report(const ScalFun& f, const PolyCone& K, int n_samples, std::uint64_t seed,
                         std::optional<double> slack_opt) {
    const int n = K.dim();
    const double slack = slack_opt.value_or(tol().eps_cmp);
    const double es = tol().eps_strict;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(-1.0, 1.0), pos(0.0, 1.0);
    const Vec center = interior_direction(K);
    const auto& rays = K.rays();

    auto rand_box = [&]() {
        Vec y(n);
        for (int i = 0; i < n; ++i) y[i] = unif(rng);
        return y;
    };
    auto rand_cone = [&]() {
        Vec k = Vec::Zero(n);
        for (const auto& r : rays) k += pos(rng) * r;
        return k;
    };
    // A point on the boundary of K: combination of the rays on one facet.
    auto rand_boundary = [&]() {
        const auto& F = K.facets();
        const Vec& a = F[static_cast<std::size_t>(pos(rng) * F.size()) % F.size()];
        Vec k = Vec::Zero(n);
        for (const auto& r : rays) {
            if (std::abs(a.dot(r)) <= 1e-9) k += pos(rng) * r;
        }
        return k;
    };
    auto record = [](AxiomCheck& c, double magnitude, bool violated, std::vector<Vec> w) {
        ++c.probes;
        c.worst = std::max(c.worst, magnitude);
        if (violated) {
            if (c.violations == 0) c.witness = std::move(w);
            ++c.violations;
        }
    };

    AxiomReport rep;
    for (int s = 0; s < n_samples; ++s) {
        const Vec y = rand_box();
        const double fy = eval(f, y);

        const Vec k = rand_cone();
        const double dec = fy - eval(f, y + k);
        record(rep.k_monotone, std::max(0.0, dec), dec > slack, {y, k});

        if (K.solid()) {
            Vec ki = rand_cone() + (0.05 + pos(rng)) * center;
            if (K.min_slack(ki) > es) {
                const double gain = eval(f, y + ki) - fy;
                record(rep.strictly_monotone, std::max(0.0, -gain), gain <= 0.0, {y, ki});
            }
        }

        // Level sets: {f <= 0} = -K and {f < 0} = int(-K).
        const double s_y = K.min_slack(-y);
        if (s_y >= -tol().eps_feas) {
            record(rep.level_set_eq, std::max(0.0, fy), fy > slack, {y});
        } else if (s_y < -es) {
            record(rep.level_set_eq, std::max(0.0, -fy), fy <= 0.0, {y});
            record(rep.strict_level_set_eq, std::max(0.0, -fy), fy < -slack, {y});
        }
        if (s_y > es) record(rep.strict_level_set_eq, std::max(0.0, fy), fy >= 0.0, {y});

        if (!K.is_full() && !rays.empty()) {
            const Vec yc = -rand_cone();
            const double fc = eval(f, yc);
            record(rep.level_set_eq, std::max(0.0, fc), fc > slack, {yc});
            const Vec yb = -rand_boundary();
            const double fb = eval(f, yb);
            record(rep.level_set_eq, std::max(0.0, fb), fb > slack, {yb});
            record(rep.strict_level_set_eq, std::max(0.0, -fb), fb < -slack, {yb});
        }
    }
    for (AxiomCheck* c : {&rep.k_monotone, &rep.strictly_monotone, &rep.level_set_eq, &rep.strict_level_set_eq}) {
        c->verdict = c->probes == 0 ? Verdict::Unknown : (c->violations == 0 ? Verdict::Pass : Verdict::Fail);
    }

    // Slater: a point with f < -eps_strict.
    std::vector<Vec> cand;
    if (center.norm() > 0) cand.push_back(-center);
    for (int s = 0; s < n_samples; ++s) cand.push_back(rand_box());
    for (const auto& y : cand) {
        ++rep.slater.probes;
        if (eval(f, y) < -es) {
            rep.slater.verdict = Verdict::Pass;
            rep.slater.witness = {y};
            break;
        }
    }
    return rep;
}

bool translation_check(const Polytope& G, const Vec& r) {
    if (r.size() != G.dim()) throw DimensionMismatch("translation_check");
    for (const auto& g : G.vertices()) {
        if (std::abs(g.dot(r) - 1.0) > tol().eps_cmp) return false;
    }
    return true;
}

bool is_generator(const Polytope& G, const PolyCone& Kdual) {
    if (G.dim() != Kdual.dim()) throw DimensionMismatch("is_generator");
    if (G.contains(Vec::Zero(G.dim()))) return false;
    for (const auto& g : G.vertices()) {
        if (!Kdual.contains(g)) return false;
    }
    const PolyCone cg = PolyCone::from_rays(G.dim(), G.vertices());
    for (const auto& rho : Kdual.rays()) {
        if (!cg.contains(rho)) return false;
    }
    return true;
}

GwClass classify_gw(const Polytope& G, const PolyCone& K) {
    if (G.dim() != K.dim()) throw DimensionMismatch("classify_gw");
    if (!is_generator(G, dual_cone(K))) throw NotAGenerator("G does not generate K*");
    const int k = static_cast<int>(G.size());
    Mat V(k, G.dim());
    for (int i = 0; i < k; ++i) V.row(i) = G.vertices()[i].transpose();
    const Vec r = V.completeOrthogonalDecomposition().solve(Vec::Ones(k));
    GwClass out;
    if ((V * r - Vec::Ones(k)).lpNorm<Eigen::Infinity>() > tol().eps_cmp) {
        out.reason = "affine hull not a hyperplane section";
        return out;
    }
    if (membership(K, r) != Membership::Interior || !same_set(gw_subdiff0(K, r), G)) {
        out.reason = "slice mismatch";
        return out;
    }
    out.yes = true;
    out.r = r;
    return out;
}

Obstruction hu_obstruction_scaling(const Polytope& G) {
    const std::vector<Vec> E = hull(G.vertices()).vertices();
    const double ec = tol().eps_cmp;
    for (std::size_t i = 0; i < E.size(); ++i) {
        for (std::size_t j = i + 1; j < E.size(); ++j) {
            const Vec& p = E[i];
            const Vec& q = E[j];
            if (p.norm() < ec || q.norm() < ec) continue;
            const double lam = q.dot(p) / p.squaredNorm();
            if (lam <= 0.0 || (q - lam * p).norm() > ec * std::max(1.0, q.norm())) continue;
            if (std::abs(lam - 1.0) <= ec) continue;
            Obstruction o;
            o.found = true;
            if (lam > 1.0) {
                o.p = p;
                o.lambda = lam;
            } else {
                o.p = q;
                o.lambda = 1.0 / lam;
            }
            return o;
        }
    }
    return {};
}

Polytope arc_polygon(int n_vertices) {
    std::vector<Vec> pts;
    for (int k = 0; k < n_vertices; ++k) {
        const double th = 0.5 * std::numbers::pi * k / (n_vertices - 1);
        Vec p(2);
        p << std::cos(th), std::sin(th);
        pts.push_back(p);
    }
    return hull(pts);
}

}  // namespace scalar
