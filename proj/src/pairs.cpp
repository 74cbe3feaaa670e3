#include "scalar/pairs.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace scalar {

namespace {

CondDisjoint check_disjoint(const Polytope& G, const Polytope& H) {
    const int n = G.dim();
    // max s  s.t.  <w, h - g> + s <= 0 for all vertex pairs, |w_k| <= 1, s <= 1.
    LpProblem lp;
    lp.sense = Sense::Max;
    lp.objective = Vec::Zero(n + 1);
    lp.objective[n] = 1.0;
    for (const auto& g : G.vertices()) {
        for (const auto& h : H.vertices()) {
            Vec row(n + 1);
            row.head(n) = h - g;
            row[n] = 1.0;
            lp.add_le(row, 0.0);
        }
    }
    for (int k = 0; k < n; ++k) {
        Vec e = Vec::Zero(n + 1);
        e[k] = 1.0;
        lp.add_le(e, 1.0);
        lp.add_le(-e, 1.0);
    }
    Vec cap = Vec::Zero(n + 1);
    cap[n] = 1.0;
    lp.add_le(cap, 1.0);
    const LpResult r = solve_lp(lp);

    CondDisjoint out;
    if (r.optimal() && r.value > tol().eps_feas) {
        out.verdict = Verdict::Pass;
        out.separator = r.point.head(n);
        out.gap = r.value;
        return out;
    }
    out.verdict = Verdict::Fail;
    LpProblem meet;
    meet.objective = Vec::Zero(n);
    for (const Polytope* P : {&G, &H}) {
        for (const auto& h : P->halfspaces()) meet.add_le(h.normal, h.offset + tol().eps_feas);
    }
    const LpResult m = solve_lp(meet);
    if (m.optimal()) out.common = m.point;
    return out;
}

CondRepr check_repr(const Polytope& G, const Polytope& H, const PolyCone& K, const Fan& fan) {
    const int n = G.dim();
    CondRepr out;
    out.verdict = Verdict::Pass;
    auto fail = [&](const Vec& y) {
        out.verdict = Verdict::Fail;
        out.witness = y;
    };
    for (const auto& c : fan.cells) {
        if (fan.sampled) {
            const double psi = G.support_value(c.representative) - H.support_value(c.representative);
            if (psi <= 0.0 && !K.contains(-c.representative)) {
                fail(c.representative);
                return out;
            }
            continue;
        }
        if (!c.full_dim(n)) continue;
        const Vec w = G.vertices()[c.g_face.front()] - H.vertices()[c.h_face.front()];
        // On this cell Psi(y) = <w, y>; its part of {Psi <= 0} must lie in -K.
        std::vector<Vec> normals = PolyCone::from_rays(n, c.generators).facets();
        normals.push_back(-w);
        const PolyCone piece = PolyCone::from_halfspaces(n, normals);
        for (const auto& q : piece.rays()) {
            if (!K.contains(-q)) {
                fail(q);
                return out;
            }
        }
    }
    return out;
}

}  // namespace

PairReport validate_pair(const Polytope& G, const Polytope& H, const PolyCone& K) {
    if (G.dim() != H.dim() || G.dim() != K.dim()) throw DimensionMismatch("validate_pair");
    if (!K.solid()) throw NotSolid("K is not solid");
    if (!K.pointed()) throw NotPointed("K is not pointed");
    PairReport rep;
    const FaceRelation fr = y_face_relation_all(G, H, dual_cone(K), {RelTag::Set, Strictness::Weak});
    rep.cond_faces.verdict = fr.verdict;
    rep.cond_faces.witness = fr.witness;
    rep.cond_disjoint = check_disjoint(G, H);
    rep.cond_repr = check_repr(G, H, K, fan_refinement(G, H));
    rep.is_ds = is_ds(G, H);
    rep.convexity = sublinearity_search(G, H);
    return rep;
}

MaybePolytope dh_subdiff(const Polytope& G, const Polytope& H) { return pontryagin_diff(G, H); }

MpSubdiff mp_subdiff0(const Polytope& G, const Polytope& H) {
    if (G.dim() != H.dim()) throw DimensionMismatch("mp_subdiff0");
    const int n = G.dim();
    const Fan fan = fan_refinement(G, H);
    std::vector<Vec> grads;
    for (const auto& c : fan.cells) {
        if (!c.full_dim(n)) continue;
        grads.push_back(G.vertices()[c.g_face.front()] - H.vertices()[c.h_face.front()]);
    }
    return {hull(grads)};
}

Sandwich dual_sandwich_check(const Polytope& G, const Polytope& H, const PolyCone& K) {
    const PairReport rep = validate_pair(G, H, K);
    if (!rep.valid()) throw PairInvalid("[G, H] is not a scalarization pair");
    const int n = G.dim();
    const PolyCone Kd = dual_cone(K);
    const MaybePolytope dh = dh_subdiff(G, H);
    const Polytope mp = mp_subdiff0(G, H).hull;

    Sandwich s;
    s.dh_empty = !dh.has_value();
    s.lower_holds = true;
    if (dh) {
        for (const auto& v : dh->vertices()) s.lower_holds = s.lower_holds && Kd.contains(v);
        const PolyCone cdh = PolyCone::from_rays(n, dh->vertices());
        bool eq = s.lower_holds;
        for (const auto& rho : Kd.rays()) eq = eq && cdh.contains(rho);
        s.lower_equal = eq;
    } else {
        s.lower_equal = Kd.is_zero();
    }
    const PolyCone cmp = PolyCone::from_rays(n, mp.vertices());
    s.upper_holds = true;
    for (const auto& rho : Kd.rays()) s.upper_holds = s.upper_holds && cmp.contains(rho);
    bool eq = s.upper_holds;
    for (const auto& v : mp.vertices()) eq = eq && Kd.contains(v);
    s.upper_equal = eq;
    return s;
}

DsVerdict is_ds(const Polytope& G, const Polytope& H) {
    if (G.dim() != H.dim()) throw DimensionMismatch("is_ds");
    DsVerdict out;
    const MaybePolytope D = pontryagin_diff(G, H);
    if (!D) return out;
    if (same_set(minkowski_sum(H, *D), G)) {
        out.yes = true;
        out.D = *D;
    }
    return out;
}

Convexity sublinearity_search(const Polytope& G, const Polytope& H) {
    const Fan fan = fan_refinement(G, H);
    auto psi = [&](const Vec& y) { return G.support_value(y) - H.support_value(y); };
    Convexity out;
    double best = 0.0;
    for (std::size_t i = 0; i < fan.cells.size(); ++i) {
        for (std::size_t j = 0; j < fan.cells.size(); ++j) {
            if (i == j) continue;
            for (double t : {0.25, 0.5, 1.0, 2.0, 4.0}) {
                const Vec y1 = fan.cells[i].representative;
                const Vec y2 = t * fan.cells[j].representative;
                const double m = psi(y1 + y2) - psi(y1) - psi(y2);
                if (m > best) {
                    best = m;
                    out.y1 = y1;
                    out.y2 = y2;
                }
            }
        }
    }
    out.margin = best;
    out.convex = best <= tol().eps_strict;
    return out;
}

std::pair<Polytope, Polytope> build_nonconvex_pair_1d(double a, double b, double c, double d) {
    if (!(a > d)) throw PreconditionViolated("a > d");
    if (!(b >= a)) throw PreconditionViolated("b >= a");
    if (!(d >= c)) throw PreconditionViolated("d >= c");
    if (!(b - d < a - c)) throw PreconditionViolated("b - d < a - c");
    Polytope G = Polytope::interval(a, b);
    Polytope H = Polytope::interval(c, d);
    const PolyCone K = PolyCone::orthant(1);
    if (!validate_pair(G, H, K).valid()) throw ConstructionFailed("validate_pair");
    if (is_ds(G, H).yes) throw ConstructionFailed("is_ds");
    return {G, H};
}

Construction2d build_nonconvex_pair_2d(const PolyCone& K, const Vec& r) {
    if (K.dim() != 2 || r.size() != 2 || !K.solid() || !K.pointed() ||
        membership(K, r) != Membership::Interior) {
        throw ConstructionFailed("precondition");
    }
    const PolyCone Kd = dual_cone(K);
    if (!Kd.solid()) throw ConstructionFailed("precondition");

    Construction2d out;
    out.B = gw_subdiff0(K, r);
    Vec v = Vec::Zero(2);
    for (const auto& rho : Kd.rays()) v += rho;
    v.normalize();
    out.eps = std::numeric_limits<double>::infinity();
    for (const auto& a : Kd.facets()) out.eps = std::min(out.eps, a.dot(v));
    out.M = out.B.max_vertex_norm();
    out.p_star = (out.M / out.eps) * v;

    std::vector<Halfspace> hs = GenPolyhedron{out.B, Kd}.halfspaces();
    for (const auto& h : GenPolyhedron{Polytope::point(out.p_star), Kd.negated()}.halfspaces()) hs.push_back(h);
    const MaybePolytope G = from_halfspaces(2, hs);
    if (!G) throw ConstructionFailed("G");
    out.G = *G;

    // Vertices exposed by some direction in which p* is suboptimal.
    std::vector<Vec> pts = out.B.vertices();
    for (const auto& g : out.G.vertices()) {
        LpProblem lp;
        lp.sense = Sense::Max;
        lp.objective = g - out.p_star;
        for (const auto& u : out.G.vertices()) lp.add_le(u - g, 0.0);
        for (int k = 0; k < 2; ++k) {
            lp.add_le(Vec::Unit(2, k), 1.0);
            lp.add_le(-Vec::Unit(2, k), 1.0);
        }
        const LpResult res = solve_lp(lp);
        if (res.optimal() && res.value > tol().eps_strict) pts.push_back(g);
    }
    out.H_tilde = hull(pts);
    out.beta = out.B.min_vertex_norm();
    out.gamma = out.H_tilde.max_vertex_norm();
    out.H = out.H_tilde.scaled(out.beta / (2.0 * out.gamma));

    if (!validate_pair(out.G, out.H, K).valid()) throw ConstructionFailed("validate_pair");
    if (is_ds(out.G, out.H).yes) throw ConstructionFailed("is_ds");
    out.violation = sublinearity_search(out.G, out.H);
    if (out.violation.convex) throw ConstructionFailed("sublinearity");
    return out;
}

}  // namespace scalar
