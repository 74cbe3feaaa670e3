#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "scalar/cone.hpp"
#include "scalar/polytope.hpp"
#include "scalar/scalarize.hpp"
#include "scalar/setrel.hpp"

namespace scalar {

struct CondFaces {
    FaceVerdict verdict = FaceVerdict::Unknown;
    std::optional<Vec> witness;  // failing direction y
};

struct CondDisjoint {
    Verdict verdict = Verdict::Unknown;
    Vec separator;               // w with max_H <w,.> < min_G <w,.>, when disjoint
    double gap = 0.0;            // min_G <w,.> - max_H <w,.>
    std::optional<Vec> common;   // a point of G and H, when they meet
};

struct CondRepr {
    Verdict verdict = Verdict::Unknown;
    std::optional<Vec> witness;  // y with Psi(y) <= 0 outside -K
};

struct DsVerdict {
    bool yes = false;
    std::optional<Polytope> D;   // G minus H (Pontryagin), when yes
};

struct Convexity {
    bool convex = true;
    Vec y1, y2;                  // Psi(y1 + y2) > Psi(y1) + Psi(y2) + eps_strict when !convex
    double margin = 0.0;
};

struct PairReport {
    CondFaces cond_faces;
    CondDisjoint cond_disjoint;
    CondRepr cond_repr;
    DsVerdict is_ds;
    Convexity convexity;

    bool valid() const {
        return (cond_faces.verdict == FaceVerdict::Holds || cond_faces.verdict == FaceVerdict::HoldsSampled) &&
               cond_disjoint.verdict == Verdict::Pass && cond_repr.verdict == Verdict::Pass;
    }
};

/// Scalarization-pair conditions for Psi = sigma_G - sigma_H. Throws NotSolid, NotPointed.
PairReport validate_pair(const Polytope& G, const Polytope& H, const PolyCone& K);

/// Dini-Hadamard subdifferential at 0: G minus H (Pontryagin).
MaybePolytope dh_subdiff(const Polytope& G, const Polytope& H);

/// Michel-Penot subdifferential at 0: hull of the gradients g - h over full-dimensional fan cells.
struct MpSubdiff {
    Polytope hull;
};

MpSubdiff mp_subdiff0(const Polytope& G, const Polytope& H);

struct Sandwich {
    bool lower_holds = false;  // cone(G minus H) subset of K*
    bool upper_holds = false;  // K* subset of cone(MP)
    bool lower_equal = false;
    bool upper_equal = false;
    bool dh_empty = false;
};

/// Throws PairInvalid when [G, H] fails validate_pair.
Sandwich dual_sandwich_check(const Polytope& G, const Polytope& H, const PolyCone& K);

DsVerdict is_ds(const Polytope& G, const Polytope& H);

/// Search over fan-cell representative pairs for Psi(y1 + y2) > Psi(y1) + Psi(y2) + eps_strict.
Convexity sublinearity_search(const Polytope& G, const Polytope& H);

/// G = [a, b], H = [c, d]. Throws PreconditionViolated naming the failing inequality.
std::pair<Polytope, Polytope> build_nonconvex_pair_1d(double a, double b, double c, double d);

struct Construction2d {
    Polytope G, H;
    Polytope B;        // slice of K* by <., r> = 1
    Polytope H_tilde;  // H before scaling
    Vec p_star;
    double eps = 0, M = 0, beta = 0, gamma = 0;
    Convexity violation;
};

/// Non-DS scalarization pair in the plane. Throws ConstructionFailed(stage).
Construction2d build_nonconvex_pair_2d(const PolyCone& K, const Vec& r);

}  // namespace scalar
