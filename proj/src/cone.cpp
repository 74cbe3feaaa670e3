#include "scalar/cone.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace scalar {

namespace {

constexpr double kRankTol = 1e-9;
constexpr double kSideTol = 1e-9;

void push_unique(std::vector<Vec>& out, const Vec& v) {
    for (const auto& w : out) {
        if ((w - v).norm() < 1e-9) return;
    }
    out.push_back(v);
}

std::vector<Vec> unit_directions(const std::vector<Vec>& gens) {
    std::vector<Vec> out;
    for (const auto& g : gens) {
        const double nrm = g.norm();
        if (nrm > 1e-12) push_unique(out, g / nrm);
    }
    return out;
}

bool next_combination(std::vector<int>& sel, int m) {
    const int k = static_cast<int>(sel.size());
    int pos = k - 1;
    while (pos >= 0 && sel[pos] == m - k + pos) --pos;
    if (pos < 0) return false;
    ++sel[pos];
    for (int i = pos + 1; i < k; ++i) sel[i] = sel[i - 1] + 1;
    return true;
}

}  // namespace

std::vector<Vec> cone_facets(int dim, const std::vector<Vec>& generators) {
    for (const auto& g : generators) {
        if (g.size() != dim) throw DimensionMismatch("cone generator dimension");
    }
    const std::vector<Vec> gens = unit_directions(generators);
    std::vector<Vec> out;
    if (gens.empty()) {
        for (int i = 0; i < dim; ++i) {
            out.push_back(Vec::Unit(dim, i));
            out.push_back(-Vec::Unit(dim, i));
        }
        return out;
    }
    const int k = static_cast<int>(gens.size());
    Mat G(dim, k);
    for (int j = 0; j < k; ++j) G.col(j) = gens[j];
    Eigen::JacobiSVD<Mat> svd(G, Eigen::ComputeFullU);
    const auto& sv = svd.singularValues();
    int d = 0;
    for (int i = 0; i < sv.size(); ++i) {
        if (sv[i] > kRankTol * std::max(1.0, sv[0])) ++d;
    }
    const Mat U = svd.matrixU();
    for (int i = d; i < dim; ++i) {
        out.push_back(U.col(i));
        out.push_back(-U.col(i));
    }
    const Mat Ud = U.leftCols(d);
    Mat Gp = Ud.transpose() * G;  // d x k, solid in R^d

    auto try_normal = [&](Vec a) {
        a.normalize();
        for (int sign : {1, -1}) {
            const Vec s = sign * a;
            bool valid = true, strict = false;
            for (int j = 0; j < k; ++j) {
                const double v = s.dot(Gp.col(j));
                if (v < -kSideTol) {
                    valid = false;
                    break;
                }
                if (v > kSideTol) strict = true;
            }
            if (valid && strict) push_unique(out, Ud * s);
        }
    };

    if (d == 1) {
        try_normal(Vec::Ones(1));
    } else {
        std::vector<int> sel(d - 1);
        for (int i = 0; i < d - 1; ++i) sel[i] = i;
        if (d - 1 <= k) {
            do {
                Mat S(d - 1, d);
                for (int i = 0; i < d - 1; ++i) S.row(i) = Gp.col(sel[i]).transpose();
                Eigen::JacobiSVD<Mat> s2(S, Eigen::ComputeFullV);
                const auto& sv2 = s2.singularValues();
                if (sv2.size() == d - 1 && sv2[d - 2] < 1e-9) continue;
                try_normal(s2.matrixV().col(d - 1));
            } while (next_combination(sel, k));
        }
    }
    return out;
}

PolyCone PolyCone::from_rays(int dim, const std::vector<Vec>& generators) {
    PolyCone c;
    c.dim_ = dim;
    c.facets_ = cone_facets(dim, generators);
    c.rays_ = cone_facets(dim, c.facets_);
    c.pointed_ = true;
    c.solid_ = true;
    if (!c.rays_.empty()) {
        Mat R(dim, static_cast<int>(c.rays_.size()));
        for (int j = 0; j < R.cols(); ++j) R.col(j) = c.rays_[j];
        c.solid_ = Eigen::FullPivLU<Mat>(R).rank() == dim;
    } else {
        c.solid_ = dim == 0;
    }
    if (!c.facets_.empty()) {
        Mat F(dim, static_cast<int>(c.facets_.size()));
        for (int j = 0; j < F.cols(); ++j) F.col(j) = c.facets_[j];
        c.pointed_ = Eigen::FullPivLU<Mat>(F).rank() == dim;
    } else {
        c.pointed_ = dim == 0;
    }
    return c;
}

PolyCone PolyCone::from_halfspaces(int dim, const std::vector<Vec>& normals) {
    // The extreme rays of {x : <a_i,x> >= 0} are the facet normals of cone(a_i).
    return from_rays(dim, cone_facets(dim, normals));
}

PolyCone PolyCone::orthant(int dim) {
    std::vector<Vec> g;
    for (int i = 0; i < dim; ++i) g.push_back(Vec::Unit(dim, i));
    return from_rays(dim, g);
}

PolyCone PolyCone::zero(int dim) { return from_rays(dim, {}); }

PolyCone PolyCone::full(int dim) {
    std::vector<Vec> g;
    for (int i = 0; i < dim; ++i) {
        g.push_back(Vec::Unit(dim, i));
        g.push_back(-Vec::Unit(dim, i));
    }
    return from_rays(dim, g);
}

double PolyCone::min_slack(const Vec& y) const {
    if (y.size() != dim_) throw DimensionMismatch("cone membership");
    double s = std::numeric_limits<double>::infinity();
    for (const auto& a : facets_) s = std::min(s, a.dot(y));
    return s;
}

bool PolyCone::contains(const Vec& y) const {
    return min_slack(y) >= -tol().eps_feas * std::max(1.0, y.norm());
}

PolyCone PolyCone::negated() const {
    PolyCone c = *this;
    for (auto& r : c.rays_) r = -r;
    for (auto& a : c.facets_) a = -a;
    return c;
}

PolyCone dual_cone(const PolyCone& C) {
    return PolyCone::from_rays(C.dim(), C.facets());
}

Membership membership(const PolyCone& C, const Vec& y) {
    const double s = C.min_slack(y);
    const double es = tol().eps_strict;
    if (s < -es) return Membership::Outside;
    if (s > es && C.solid()) return Membership::Interior;
    return Membership::Boundary;
}

bool BPCone::contains(const Vec& y) const {
    return anchor.dot(y) >= y.norm() - tol().eps_feas * std::max(1.0, y.norm());
}

bool bp_dual_member(const BPCone& bp, const Vec& ystar) {
    if (ystar.size() != bp.anchor.size()) throw DimensionMismatch("bp_dual_member");
    const double a2 = bp.anchor.squaredNorm();
    if (a2 <= 1.0) throw AnchorTooShort("|anchor| <= 1");
    // |y* - t a|^2 <= t^2  <=>  (|a|^2 - 1) t^2 - 2 <y*,a> t + |y*|^2 <= 0.
    const double alpha = a2 - 1.0;
    const double beta = ystar.dot(bp.anchor);
    const double gamma = ystar.squaredNorm();
    const double slack = tol().eps_feas * (1.0 + gamma);
    if (beta <= 0.0) return gamma <= slack;
    return gamma - beta * beta / alpha <= slack;
}

BpDecision bp_dual_member_checked(const BPCone& bp, const Vec& ystar, int samples, std::uint64_t seed) {
    try {
        return {bp_dual_member(bp, ystar), true};
    } catch (const AnchorTooShort&) {
    }
    // |anchor| < 1: the cone is {0}, its dual everything. |anchor| = 1: the ray through the anchor.
    const double na = bp.anchor.norm();
    if (na < 1.0 - tol().eps_feas) return {true, false};
    const int n = static_cast<int>(ystar.size());
    const Vec ahat = bp.anchor / na;
    const double theta_max = std::acos(std::min(1.0, 1.0 / na));
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss;
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    double worst = ystar.dot(ahat);
    for (int s = 0; s < samples && n > 1; ++s) {
        Vec u(n);
        for (int i = 0; i < n; ++i) u[i] = gauss(rng);
        u -= u.dot(ahat) * ahat;
        if (u.norm() < 1e-12) continue;
        u.normalize();
        const double th = theta_max * unif(rng);
        worst = std::min(worst, ystar.dot(std::cos(th) * ahat + std::sin(th) * u));
    }
    return {worst >= -tol().eps_cmp, false};
}

}  // namespace scalar
