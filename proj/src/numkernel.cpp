#include "scalar/numkernel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "scalar/cone.hpp"
#include "scalar/polytope.hpp"

namespace scalar {

namespace {

Tolerances g_tol;

constexpr double kOptTol = 1e-10;
constexpr double kPivTol = 1e-11;
constexpr int kMaxPivots = 200000;

class Tableau {
public:
    Tableau(int rows, int cols) : rows_(rows), cols_(cols), a_((rows + 1) * (cols + 1), 0.0) {}

    double& at(int i, int j) { return a_[i * (cols_ + 1) + j]; }
    double& rhs(int i) { return at(i, cols_); }
    double& cost(int j) { return at(rows_, j); }

    void pivot(int r, int e) {
        const int w = cols_ + 1;
        double* pr = &a_[r * w];
        const double inv = 1.0 / pr[e];
        for (int j = 0; j < w; ++j) pr[j] *= inv;
        pr[e] = 1.0;
        for (int i = 0; i <= rows_; ++i) {
            if (i == r) continue;
            double* pi = &a_[i * w];
            const double f = pi[e];
            if (f == 0.0) continue;
            for (int j = 0; j < w; ++j) pi[j] -= f * pr[j];
            pi[e] = 0.0;
        }
    }

private:
    int rows_, cols_;
    std::vector<double> a_;
};

enum class Outcome { Optimal, Unbounded };

// Bland's rule: lowest-index improving column, lowest-index basic variable among tied ratios.
Outcome run_simplex(Tableau& t, std::vector<int>& basis, int cols, const std::vector<bool>& allowed) {
    const int m = static_cast<int>(basis.size());
    for (int iter = 0; iter < kMaxPivots; ++iter) {
        int e = -1;
        for (int j = 0; j < cols; ++j) {
            if (allowed[j] && t.cost(j) < -kOptTol) {
                e = j;
                break;
            }
        }
        if (e < 0) return Outcome::Optimal;
        int r = -1;
        double best = 0.0;
        for (int i = 0; i < m; ++i) {
            const double aie = t.at(i, e);
            if (aie <= kPivTol) continue;
            const double ratio = t.rhs(i) / aie;
            if (r < 0 || ratio < best - 1e-12 * (1.0 + std::abs(best))) {
                r = i;
                best = ratio;
            } else if (std::abs(ratio - best) <= 1e-12 * (1.0 + std::abs(best)) && basis[i] < basis[r]) {
                r = i;
            }
        }
        if (r < 0) return Outcome::Unbounded;
        t.pivot(r, e);
        basis[r] = e;
    }
    throw std::runtime_error("solve_lp: pivot limit exceeded");
}

}  // namespace

const Tolerances& tol() { return g_tol; }

void set_tolerances(const Tolerances& t) {
    if (!t.valid()) throw std::invalid_argument("tolerances must satisfy 0 < eps_feas < eps_strict < 1");
    g_tol = t;
}

LpResult solve_lp(const LpProblem& p) {
    const int n = static_cast<int>(p.objective.size());
    const int m = static_cast<int>(p.constraints.size());
    for (const auto& c : p.constraints) {
        if (c.normal.size() != n) throw DimensionMismatch("constraint normal dimension differs from objective");
    }
    const Vec cint = p.sense == Sense::Min ? p.objective : Vec(-p.objective);

    // Columns: x+ (n), x- (n), slacks for <= rows, artificials where no unit column exists.
    std::vector<int> slack_col(m, -1), unit_col(m, -1), flip(m, 1);
    int cols = 2 * n;
    for (int i = 0; i < m; ++i) {
        if (p.constraints[i].rel == Relation::LessEq) slack_col[i] = cols++;
    }
    std::vector<bool> artificial;
    int first_art = cols;
    for (int i = 0; i < m; ++i) {
        flip[i] = p.constraints[i].bound < 0.0 ? -1 : 1;
        if (slack_col[i] >= 0 && flip[i] == 1) {
            unit_col[i] = slack_col[i];
        } else {
            unit_col[i] = cols++;
        }
    }
    artificial.assign(cols, false);
    for (int j = first_art; j < cols; ++j) artificial[j] = true;

    Tableau t(m, cols);
    std::vector<int> basis(m);
    double bscale = 0.0;
    for (int i = 0; i < m; ++i) {
        const auto& c = p.constraints[i];
        const double f = flip[i];
        for (int j = 0; j < n; ++j) {
            t.at(i, j) = f * c.normal[j];
            t.at(i, n + j) = -f * c.normal[j];
        }
        if (slack_col[i] >= 0) t.at(i, slack_col[i]) = f;
        t.at(i, unit_col[i]) = 1.0;
        t.rhs(i) = f * c.bound;
        basis[i] = unit_col[i];
        bscale = std::max(bscale, std::abs(c.bound));
    }

    LpResult res;
    res.dual = Vec::Zero(m);

    // Phase 1: minimize the sum of artificials.
    bool any_art = cols > first_art;
    if (any_art) {
        for (int i = 0; i < m; ++i) {
            if (!artificial[basis[i]]) continue;
            for (int j = 0; j <= cols; ++j) {
                if (j < cols && artificial[j]) continue;
                t.at(m, j) -= t.at(i, j);
            }
        }
        std::vector<bool> all(cols, true);
        run_simplex(t, basis, cols, all);
        const double infeas = -t.rhs(m);
        if (infeas > tol().eps_feas * (1.0 + bscale)) {
            res.status = LpStatus::Infeasible;
            return res;
        }
        for (int i = 0; i < m; ++i) {
            if (!artificial[basis[i]]) continue;
            int best = -1;
            for (int j = 0; j < first_art; ++j) {
                if (std::abs(t.at(i, j)) > 1e-9) {
                    best = j;
                    break;
                }
            }
            if (best >= 0) {
                t.pivot(i, best);
                basis[i] = best;
            }
        }
    }

    // Phase 2.
    std::vector<double> c2(cols, 0.0);
    for (int j = 0; j < n; ++j) {
        c2[j] = cint[j];
        c2[n + j] = -cint[j];
    }
    for (int j = 0; j <= cols; ++j) t.at(m, j) = j < cols ? c2[j] : 0.0;
    for (int i = 0; i < m; ++i) {
        const double cb = c2[basis[i]];
        if (cb == 0.0) continue;
        for (int j = 0; j <= cols; ++j) t.at(m, j) -= cb * t.at(i, j);
    }
    std::vector<bool> allowed(cols, true);
    for (int j = first_art; j < cols; ++j) allowed[j] = false;
    if (run_simplex(t, basis, cols, allowed) == Outcome::Unbounded) {
        res.status = LpStatus::Unbounded;
        return res;
    }

    res.status = LpStatus::Optimal;
    res.point = Vec::Zero(n);
    for (int i = 0; i < m; ++i) {
        if (basis[i] < n) res.point[basis[i]] += t.rhs(i);
        else if (basis[i] < 2 * n) res.point[basis[i] - n] -= t.rhs(i);
    }
    res.value = p.objective.dot(res.point);
    const double sgn = p.sense == Sense::Min ? 1.0 : -1.0;
    res.dual_value = 0.0;
    for (int i = 0; i < m; ++i) {
        const double y = -t.cost(unit_col[i]) * flip[i];
        res.dual[i] = sgn * y;
        res.dual_value += res.dual[i] * p.constraints[i].bound;
    }
    return res;
}

bool certify_lp(const LpProblem& p, const LpResult& r, double slack) {
    if (!r.optimal()) return false;
    const int n = static_cast<int>(p.objective.size());
    Vec resid = -p.objective;
    for (std::size_t i = 0; i < p.constraints.size(); ++i) {
        const auto& c = p.constraints[i];
        const double lhs = c.normal.dot(r.point);
        const double s = slack * (1.0 + std::abs(c.bound) + c.normal.lpNorm<Eigen::Infinity>() * r.point.lpNorm<Eigen::Infinity>());
        if (c.rel == Relation::LessEq) {
            if (lhs > c.bound + s) return false;
            const double y = r.dual[i];
            if (p.sense == Sense::Max ? y < -slack : y > slack) return false;
        } else if (std::abs(lhs - c.bound) > s) {
            return false;
        }
        resid += r.dual[i] * c.normal;
    }
    const double scale = 1.0 + (n > 0 ? p.objective.lpNorm<Eigen::Infinity>() : 0.0);
    if (n > 0 && resid.lpNorm<Eigen::Infinity>() > slack * scale * 10.0) return false;
    return std::abs(r.dual_value - r.value) <= slack * (1.0 + std::abs(r.value)) * 10.0;
}

Vec project_cone_nnls(const Vec& y, const std::vector<Vec>& rays) {
    const int n = static_cast<int>(y.size());
    const int k = static_cast<int>(rays.size());
    if (k == 0) return Vec::Zero(n);
    Mat A(n, k);
    for (int j = 0; j < k; ++j) {
        if (rays[j].size() != n) throw DimensionMismatch("ray dimension");
        A.col(j) = rays[j];
    }
    Vec x = Vec::Zero(k);
    std::vector<bool> passive(k, false);
    const double thr = 1e-13 * (1.0 + y.norm());
    for (int outer = 0; outer < 4 * k + 10; ++outer) {
        Vec w = A.transpose() * (y - A * x);
        int jmax = -1;
        double wmax = thr;
        for (int j = 0; j < k; ++j) {
            if (!passive[j] && w[j] > wmax) {
                wmax = w[j];
                jmax = j;
            }
        }
        if (jmax < 0) break;
        passive[jmax] = true;
        for (int inner = 0; inner < 4 * k + 10; ++inner) {
            std::vector<int> idx;
            for (int j = 0; j < k; ++j) if (passive[j]) idx.push_back(j);
            Mat Ap(n, static_cast<int>(idx.size()));
            for (std::size_t q = 0; q < idx.size(); ++q) Ap.col(static_cast<int>(q)) = A.col(idx[q]);
            Vec zp = Ap.completeOrthogonalDecomposition().solve(y);
            bool positive = true;
            for (int q = 0; q < zp.size(); ++q) if (zp[q] <= 0.0) positive = false;
            if (positive) {
                x.setZero();
                for (std::size_t q = 0; q < idx.size(); ++q) x[idx[q]] = zp[static_cast<int>(q)];
                break;
            }
            double alpha = 1.0;
            for (std::size_t q = 0; q < idx.size(); ++q) {
                const double zq = zp[static_cast<int>(q)];
                if (zq <= 0.0) {
                    const double xq = x[idx[q]];
                    alpha = std::min(alpha, xq / (xq - zq));
                }
            }
            for (std::size_t q = 0; q < idx.size(); ++q) {
                const int j = idx[q];
                x[j] += alpha * (zp[static_cast<int>(q)] - x[j]);
                if (x[j] <= 1e-15) {
                    x[j] = 0.0;
                    passive[j] = false;
                }
            }
        }
    }
    return A * x;
}

Vec project_cone(const Vec& y, const PolyCone& C) {
    const int n = C.dim();
    if (y.size() != n) throw DimensionMismatch("project_cone");
    if (C.is_full()) return y;
    if (C.is_zero()) return Vec::Zero(n);

    const auto& F = C.facets();
    const int m = static_cast<int>(F.size());
    const double slack = 1e-11 * (1.0 + y.norm());

    // Budget on the subset enumeration; beyond it fall back to NNLS on the rays.
    double count = 0.0, binom = 1.0;
    for (int k = 0; k <= std::min(m, n); ++k) {
        count += binom;
        binom = binom * (m - k) / (k + 1);
    }
    if (count <= 2e5) {
        std::vector<int> sel;
        for (int k = 0; k <= std::min(m, n); ++k) {
            sel.resize(k);
            for (int i = 0; i < k; ++i) sel[i] = i;
            while (true) {
                Vec p = y;
                bool ok = true;
                if (k > 0) {
                    Mat As(k, n);
                    for (int i = 0; i < k; ++i) As.row(i) = F[sel[i]].transpose();
                    Mat gram = As * As.transpose();
                    Eigen::LDLT<Mat> ldlt(gram);
                    if (ldlt.info() != Eigen::Success || ldlt.vectorD().minCoeff() < 1e-10) {
                        ok = false;
                    } else {
                        Vec mu = -ldlt.solve(As * y);
                        if (mu.minCoeff() < -slack) ok = false;
                        p = y + As.transpose() * mu;
                    }
                }
                if (ok) {
                    for (int i = 0; i < m; ++i) {
                        if (F[i].dot(p) < -slack) {
                            ok = false;
                            break;
                        }
                    }
                }
                if (ok) return p;
                int pos = k - 1;
                while (pos >= 0 && sel[pos] == m - k + pos) --pos;
                if (pos < 0) break;
                ++sel[pos];
                for (int i = pos + 1; i < k; ++i) sel[i] = sel[i - 1] + 1;
            }
        }
    }
    return project_cone_nnls(y, C.rays());
}

namespace {

void check_ball(const Polytope& B) {
    const double ef = tol().eps_feas;
    for (const auto& v : B.vertices()) {
        if (B.violation(-v) > ef * (1.0 + v.norm())) throw AsymmetricBall("B differs from -B");
    }
    if (B.aff_dim() < B.dim()) throw DegenerateBall("B is not full-dimensional");
    for (const auto& h : B.halfspaces()) {
        if (h.offset <= tol().eps_strict) throw DegenerateBall("0 is not strictly inside B");
    }
}

double solve_distance(const Vec& y, const Polytope& B, LpProblem& lp) {
    const int n = static_cast<int>(y.size());
    lp.objective = Vec::Zero(n + 1);
    lp.objective[n] = 1.0;
    lp.sense = Sense::Min;
    for (const auto& h : B.halfspaces()) {
        Vec row(n + 1);
        row.head(n) = -h.normal;
        row[n] = -h.offset;
        lp.add_le(row, -h.normal.dot(y));
    }
    Vec lam = Vec::Zero(n + 1);
    lam[n] = -1.0;
    lp.add_le(lam, 0.0);
    LpResult r = solve_lp(lp);
    if (!r.optimal()) throw std::runtime_error("dist_polyhedral_norm: distance LP not optimal");
    return std::max(0.0, r.value);
}

}  // namespace

double dist_polyhedral_norm(const Vec& y, const PolyCone& S, const Polytope& B) {
    const int n = static_cast<int>(y.size());
    if (S.dim() != n || B.dim() != n) throw DimensionMismatch("dist_polyhedral_norm");
    check_ball(B);
    LpProblem lp;
    for (const auto& a : S.facets()) {
        Vec row = Vec::Zero(n + 1);
        row.head(n) = -a;
        lp.add_le(row, 0.0);
    }
    return solve_distance(y, B, lp);
}

double dist_polyhedral_norm(const Vec& y, const Polytope& S, const Polytope& B) {
    const int n = static_cast<int>(y.size());
    if (S.dim() != n || B.dim() != n) throw DimensionMismatch("dist_polyhedral_norm");
    check_ball(B);
    LpProblem lp;
    for (const auto& h : S.halfspaces()) {
        Vec row = Vec::Zero(n + 1);
        row.head(n) = h.normal;
        lp.add_le(row, h.offset);
    }
    return solve_distance(y, B, lp);
}

double gauge(const Polytope& B, const Vec& z) {
    double g = 0.0;
    for (const auto& h : B.halfspaces()) {
        if (h.offset <= 0.0) throw DegenerateBall("0 is not strictly inside B");
        g = std::max(g, h.normal.dot(z) / h.offset);
    }
    return g;
}

}  // namespace scalar
