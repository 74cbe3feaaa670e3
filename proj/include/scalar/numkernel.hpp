#pragma once

#include <Eigen/Dense>

#include <vector>

#include "scalar/errors.hpp"

namespace scalar {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

class PolyCone;
class Polytope;

/// Library-wide comparison slacks.
struct Tolerances {
    double eps_feas = 1e-9;    // feasibility slack
    double eps_cmp = 1e-7;     // value comparison: |a-b| <= eps_cmp
    double eps_strict = 1e-6;  // strict inequalities need at least this margin

    bool valid() const { return 0.0 < eps_feas && eps_feas < eps_strict && eps_strict < 1.0; }
};

/// Current tolerances. Set once at startup (before any concurrent use).
const Tolerances& tol();
/// Replaces the tolerances; throws std::invalid_argument if `t` is not valid().
void set_tolerances(const Tolerances& t);

/// Restores the previous tolerances when it goes out of scope.
class ScopedTolerances {
public:
    explicit ScopedTolerances(const Tolerances& t) : saved_(tol()) { set_tolerances(t); }
    ~ScopedTolerances() { set_tolerances(saved_); }
    ScopedTolerances(const ScopedTolerances&) = delete;
    ScopedTolerances& operator=(const ScopedTolerances&) = delete;

private:
    Tolerances saved_;
};

enum class Relation { LessEq, Eq };
enum class Sense { Min, Max };

struct LinearConstraint {
    Vec normal;
    double bound = 0.0;
    Relation rel = Relation::LessEq;
};

/// Optimize objective . x over free x subject to the constraints.
struct LpProblem {
    Vec objective;
    std::vector<LinearConstraint> constraints;
    Sense sense = Sense::Min;

    void add_le(Vec normal, double bound) { constraints.push_back({std::move(normal), bound, Relation::LessEq}); }
    void add_eq(Vec normal, double bound) { constraints.push_back({std::move(normal), bound, Relation::Eq}); }
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    double value = 0.0;  // objective . point, in the problem's own sense
    Vec point;
    /// Dual certificate: sum_i dual_i * normal_i = objective and sum_i dual_i * bound_i = value.
    /// Inequality multipliers are >= 0 for Max and <= 0 for Min.
    Vec dual;
    double dual_value = 0.0;

    bool optimal() const { return status == LpStatus::Optimal; }
};

/// Dense two-phase simplex with Bland's rule. Sized for dim <= 16 and <= 512 constraints.
LpResult solve_lp(const LpProblem& p);

/// Checks primal feasibility, dual feasibility and the value match of an Optimal result.
bool certify_lp(const LpProblem& p, const LpResult& r, double slack);

/// Euclidean projection of y onto C (active-set enumeration over facet subsets).
Vec project_cone(const Vec& y, const PolyCone& C);

/// Euclidean projection onto cone(rays) by Lawson-Hanson nonnegative least squares.
Vec project_cone_nnls(const Vec& y, const std::vector<Vec>& rays);

/// inf { rho_B(y - s) : s in S } with rho_B the gauge of the symmetric ball B, as one LP.
double dist_polyhedral_norm(const Vec& y, const PolyCone& S, const Polytope& B);
double dist_polyhedral_norm(const Vec& y, const Polytope& S, const Polytope& B);

/// Gauge (Minkowski functional) of B at z.
double gauge(const Polytope& B, const Vec& z);

}  // namespace scalar
