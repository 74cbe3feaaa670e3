#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "scalar/cone.hpp"
#include "scalar/polytope.hpp"

namespace scalar {

/// min { t : t r - y in K }.
struct GW {
    PolyCone K;
    Vec r;
};

/// d(y, -K) - d(y, complement of -K); Euclidean unless a polytope unit ball is given.
struct HU {
    PolyCone K;
    std::optional<Polytope> ball;
};

/// sigma_G.
struct DS {
    Polytope G;
};

/// sigma_G - sigma_H.
struct QD {
    Polytope G;
    Polytope H;
};

using ScalFun = std::variant<GW, HU, DS, QD>;

/// Throws RNotInterior, NotSolid or DimensionMismatch when the variant's invariants fail.
void validate(const ScalFun& f);

double eval(const ScalFun& f, const Vec& y);

/// {y* in K* : <y*, r> = 1}. Throws RNotInterior.
Polytope gw_subdiff0(const PolyCone& K, const Vec& r);

/// Support function of conv(K* intersected with the unit sphere) at y.
double hu_sigma(const PolyCone& K, const Vec& y);

/// (r - K) intersected with (-r + K). Throws UnboundedInterval if K is not pointed.
Polytope gw_norm_ball(const PolyCone& K, const Vec& r);

enum class Verdict { Pass, Fail, Unknown };

const char* to_string(Verdict v);

struct AxiomCheck {
    Verdict verdict = Verdict::Unknown;
    std::vector<Vec> witness;  // violating point(s), or the Slater point
    double worst = 0.0;        // largest violation magnitude seen
    int probes = 0;
    int violations = 0;
};

struct AxiomReport {
    AxiomCheck k_monotone;
    AxiomCheck strictly_monotone;
    AxiomCheck level_set_eq;
    AxiomCheck strict_level_set_eq;
    AxiomCheck slater;
};

/// Sampled check of monotonicity, level-set representation and Slater's condition.
/// `slack` is the value slack beyond which a probe counts as a violation (default eps_cmp).
AxiomReport axiom_report(const ScalFun& f, const PolyCone& K, int n_samples, std::uint64_t seed = 1,
                         std::optional<double> slack = std::nullopt);

/// Every vertex g of G has <g, r> = 1.
bool translation_check(const Polytope& G, const Vec& r);

/// 0 not in G, G subset of Kdual and cone(G) = Kdual.
bool is_generator(const Polytope& G, const PolyCone& Kdual);

struct GwClass {
    bool yes = false;
    Vec r;               // set when yes
    std::string reason;  // set when no
};

/// Decides whether G is a hyperplane slice of K*. Throws NotAGenerator.
GwClass classify_gw(const Polytope& G, const PolyCone& K);

struct Obstruction {
    bool found = false;
    Vec p;              // the shorter extreme point
    double lambda = 1;  // the other one is lambda * p, lambda > 1
};

/// Two extreme points of G on one ray from the origin.
Obstruction hu_obstruction_scaling(const Polytope& G);

/// Hull of n points evenly spaced on the unit circle arc in the closed positive quadrant.
Polytope arc_polygon(int n_vertices = 720);

}  // namespace scalar
