#include "scalar/setrel.hpp"

#include <algorithm>

namespace scalar {

namespace {

// Variables (p, s): p ranges over P and d = sign * (x - p) must lie in D.
LpProblem displacement_lp(const Vec& x, const Polytope& P, const PolyCone& D, double sign, double d_slack) {
    const int n = static_cast<int>(x.size());
    LpProblem lp;
    lp.sense = Sense::Max;
    lp.objective = Vec::Zero(n + 1);
    for (const auto& h : P.halfspaces()) {
        Vec row = Vec::Zero(n + 1);
        row.head(n) = h.normal;
        lp.add_le(row, h.offset);
    }
    for (const auto& a : D.facets()) {
        // a . sign (x - p) >= s - d_slack
        Vec row(n + 1);
        row.head(n) = sign * a;
        row[n] = 1.0;
        lp.add_le(row, sign * a.dot(x) + d_slack);
    }
    return lp;
}

Truth point_relation(const Vec& x, const Polytope& P, const PolyCone& D, double sign, Strictness st) {
    const int n = static_cast<int>(x.size());
    const Tolerances& t = tol();
    const double scale = 1.0 + x.norm();

    // Largest uniform facet slack of the displacement.
    LpProblem lp = displacement_lp(x, P, D, sign, 0.0);
    lp.objective[n] = 1.0;
    Vec cap = Vec::Zero(n + 1);
    cap[n] = 1.0;
    lp.add_le(cap, 1.0);
    const LpResult r = solve_lp(lp);
    if (!r.optimal()) return Truth::Unknown;
    const double s = r.value;
    if (s < -t.eps_feas * scale) return Truth::False;

    switch (st) {
        case Strictness::Weak:
            return Truth::True;
        case Strictness::Interior:
            if (s >= t.eps_strict) return Truth::True;
            if (s <= t.eps_feas * scale) return Truth::False;
            return Truth::Unknown;
        case Strictness::Punctured: {
            // Nonzero certificate: some coordinate of d reaches eps_strict in absolute value.
            double best = 0.0;
            for (int k = 0; k < n; ++k) {
                for (double dir : {1.0, -1.0}) {
                    LpProblem q = displacement_lp(x, P, D, sign, t.eps_feas * scale);
                    q.objective = Vec::Zero(n + 1);
                    // maximize dir * d_k = dir * sign * (x_k - p_k)
                    q.objective[k] = -dir * sign;
                    Vec fix = Vec::Zero(n + 1);
                    fix[n] = 1.0;
                    q.add_eq(fix, 0.0);
                    const LpResult rq = solve_lp(q);
                    if (!rq.optimal()) continue;
                    best = std::max(best, rq.value + dir * sign * x[k]);
                }
            }
            if (best >= t.eps_strict) return Truth::True;
            if (best <= t.eps_feas * scale) return Truth::False;
            return Truth::Unknown;
        }
    }
    return Truth::Unknown;
}

Truth combine(Truth a, Truth b) {
    if (a == Truth::False || b == Truth::False) return Truth::False;
    if (a == Truth::NotApplicable || b == Truth::NotApplicable) return Truth::NotApplicable;
    if (a == Truth::Unknown || b == Truth::Unknown) return Truth::Unknown;
    return Truth::True;
}

Truth all_vertices(const Polytope& pts, const Polytope& P, const PolyCone& D, double sign, Strictness st) {
    Truth acc = Truth::True;
    for (const auto& v : pts.vertices()) {
        acc = combine(acc, point_relation(v, P, D, sign, st));
        if (acc == Truth::False) break;
    }
    return acc;
}

Polytope face_of(const Polytope& P, const std::vector<int>& idx) {
    std::vector<Vec> pts;
    for (int i : idx) pts.push_back(P.vertices()[i]);
    return hull(pts);
}

}  // namespace

const char* to_string(Truth t) {
    switch (t) {
        case Truth::True: return "true";
        case Truth::False: return "false";
        case Truth::Unknown: return "unknown";
        case Truth::NotApplicable: return "not-applicable";
    }
    return "unknown";
}

const char* to_string(FaceVerdict v) {
    switch (v) {
        case FaceVerdict::Holds: return "holds";
        case FaceVerdict::HoldsSampled: return "holds-sampled";
        case FaceVerdict::Fails: return "fails";
        case FaceVerdict::Unknown: return "unknown";
        case FaceVerdict::NotApplicable: return "not-applicable";
    }
    return "unknown";
}

Truth relate(const Polytope& H, const Polytope& G, const PolyCone& D, RelationKind kind) {
    if (H.dim() != G.dim() || D.dim() != G.dim()) throw DimensionMismatch("relate");
    if (kind.strictness == Strictness::Interior && !D.solid()) return Truth::NotApplicable;
    Truth acc = Truth::True;
    if (kind.tag == RelTag::Lower || kind.tag == RelTag::Set) {
        acc = combine(acc, all_vertices(G, H, D, 1.0, kind.strictness));  // G in H + D
    }
    if (acc != Truth::False && (kind.tag == RelTag::Upper || kind.tag == RelTag::Set)) {
        acc = combine(acc, all_vertices(H, G, D, -1.0, kind.strictness));  // H in G - D
    }
    return acc;
}

FaceRelation y_face_relation_all(const Polytope& G, const Polytope& H, const PolyCone& D, RelationKind kind) {
    FaceRelation out;
    if (kind.strictness == Strictness::Interior && !D.solid()) {
        out.verdict = FaceVerdict::NotApplicable;
        return out;
    }
    const Fan fan = fan_refinement(G, H);
    bool unknown = false;
    for (const auto& c : fan.cells) {
        const Truth t = relate(face_of(H, c.h_face), face_of(G, c.g_face), D, kind);
        if (t == Truth::False) {
            out.verdict = FaceVerdict::Fails;
            out.witness = c.representative;
            return out;
        }
        if (t != Truth::True) {
            unknown = true;
            if (!out.witness) out.witness = c.representative;
        }
    }
    if (unknown) {
        out.verdict = FaceVerdict::Unknown;
    } else {
        out.verdict = fan.sampled ? FaceVerdict::HoldsSampled : FaceVerdict::Holds;
        out.witness.reset();
    }
    return out;
}

std::vector<Vec> minimal_elements(const Polytope& P, const PolyCone& D) {
    if (P.dim() != D.dim()) throw DimensionMismatch("minimal_elements");
    if (!D.pointed()) throw NotPointed("minimal_elements needs a pointed cone");
    const int n = P.dim();
    // e in int D*, so <e, d> > 0 certifies d in D minus {0}.
    Vec e = Vec::Zero(n);
    for (const auto& a : D.facets()) e += a;
    std::vector<Vec> out;
    for (const auto& v : P.vertices()) {
        LpProblem lp = displacement_lp(v, P, D, 1.0, 0.0);
        lp.objective.head(n) = -e;
        Vec fix = Vec::Zero(n + 1);
        fix[n] = 1.0;
        lp.add_eq(fix, 0.0);
        const LpResult r = solve_lp(lp);
        const double gain = r.optimal() ? r.value + e.dot(v) : 0.0;
        if (gain < tol().eps_strict) out.push_back(v);
    }
    return out;
}

}  // namespace scalar
