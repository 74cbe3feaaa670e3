#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "scalar/pairs.hpp"

namespace scalar::suites {

using Rng = std::mt19937_64;

/// One acceptance criterion: pass/fail plus the measured worst value against its pinned bound.
struct Criterion {
    int id = 0;
    std::string name;
    bool pass = false;
    double worst = 0.0;
    double bound = 0.0;
    std::string detail;
};

struct Options {
    std::uint64_t seed = 20240611;
    std::optional<int> samples;  // overrides the per-instance probe count of every criterion
};

// Random instances.
Vec random_unit(int dim, Rng& rng);
/// Solid pointed cone whose rays all make an angle of at most ~75 degrees with a random axis.
PolyCone random_cone(int dim, Rng& rng);
/// Positive combination of all rays of K, strictly interior.
Vec interior_ray(const PolyCone& K, Rng& rng);
Polytope random_polytope(int dim, int n_points, const Vec& center, double radius, Rng& rng);
/// Generator of dual_cone(K): scaled dual rays plus a few positive combinations.
Polytope random_generator(const PolyCone& K, Rng& rng);

struct PairInstance {
    Polytope G, H;
    PolyCone K;
    std::string origin;  // "1d", "ds2", "ds3" or "construct2d"
};

/// A pair that passes validate_pair, drawn from a mix of the 1-D constructor, shifted
/// DS functionals in R^2 and R^3, and the 2-D constructor on random cones.
PairInstance random_valid_pair(Rng& rng);

// Fixtures.
/// Arc hull plus the arc point at 45 degrees and the point (1/4, 1/4) on the inner side of the chord.
Polytope g2_fixture();
/// Same, with (3/4, 3/4) in place of (1/4, 1/4). That point lies beyond the arc on the same ray,
/// so the 45 degree arc point stops being extreme and no collinear pair remains.
Polytope g2_fixture_bump();

/// sup_z [Psi(v + z) - Psi(z)] for Psi = sigma_G - sigma_H, with z over a fixed candidate set:
/// 1e3-scaled angle sweep and fan-cell representatives, plus a 41^n grid on [-2, 2]^n (n <= 2).
class MpOracle {
public:
    MpOracle(const Polytope& G, const Polytope& H);
    double operator()(const Vec& v) const;

private:
    std::vector<Vec> g_, h_;
    std::vector<Vec> z_;
    std::vector<double> psi_z_;
    double psi(const Vec& y) const;
};

// Criteria.
Criterion translation_identity(const Options& opt);
Criterion gw_equals_ds(const Options& opt);
Criterion hu_subdifferential(const Options& opt);
Criterion norm_construction(const Options& opt);
Criterion level_set_dual(const Options& opt);
Criterion bishop_phelps(const Options& opt);
Criterion one_d_pair(const Options& opt);
Criterion two_d_constructor(const Options& opt);
Criterion qd_axioms(const Options& opt);
Criterion relation_equivalence(const Options& opt);
Criterion mp_identity(const Options& opt);
Criterion arc_obstruction(const Options& opt);

const std::vector<std::string>& suite_names();
/// Throws std::invalid_argument for an unknown suite.
std::vector<Criterion> run_suite(const std::string& name, const Options& opt);
std::vector<Criterion> run_all(const Options& opt);

}  // namespace scalar::suites
