#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "scalar/cone.hpp"
#include "scalar/suites.hpp"

using namespace scalar;
using oracle::vec;

namespace {

bool has_direction(const std::vector<Vec>& vs, const Vec& d) {
    for (const auto& v : vs) {
        if ((v.normalized() - d.normalized()).norm() < 1e-9) return true;
    }
    return false;
}

Vec random_member(const std::vector<Vec>& rays, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> W(0, 1);
    Vec y = Vec::Zero(rays.front().size());
    for (const auto& r : rays) y += W(rng) * r;
    return y;
}

/// min <ystar, y> over the unit vectors y of the Bishop-Phelps cone, by sampling its
/// spherical cap (rim and interior) around the anchor direction.
double bp_sampled_min(const Vec& anchor, const Vec& ystar, std::mt19937_64& rng) {
    const int dim = static_cast<int>(anchor.size());
    const Vec a = anchor.normalized();
    const double alpha = std::acos(1.0 / anchor.norm());
    // orthonormal complement of a
    std::vector<Vec> perp;
    for (int i = 0; i < dim && static_cast<int>(perp.size()) < dim - 1; ++i) {
        Vec e = Vec::Zero(dim);
        e[i] = 1;
        e -= e.dot(a) * a;
        for (const auto& p : perp) e -= e.dot(p) * p;
        if (e.norm() > 1e-6) perp.push_back(e.normalized());
    }
    std::uniform_real_distribution<double> U(0, 1);
    double best = 1e300;
    auto probe = [&](double angle, const Vec& u) {
        const Vec y = std::cos(angle) * a + std::sin(angle) * u;
        best = std::min(best, ystar.dot(y));
    };
    for (int k = 0; k < 100000; ++k) {
        Vec u = Vec::Zero(dim);
        if (dim == 2) {
            u = (k % 2 ? 1.0 : -1.0) * perp[0];
        } else {
            const double phi = 2 * M_PI * U(rng);
            u = std::cos(phi) * perp[0] + std::sin(phi) * perp[1];
        }
        probe(k % 4 == 0 ? alpha : alpha * U(rng), u);
    }
    return best;
}

}  // namespace

TEST_SUITE("cone") {

TEST_CASE("the orthant is self-dual") {
    const PolyCone D = dual_cone(PolyCone::orthant(2));
    CHECK(D.rays().size() == 2);
    CHECK(has_direction(D.rays(), vec({1, 0})));
    CHECK(has_direction(D.rays(), vec({0, 1})));
}

TEST_CASE("dual of a planar wedge") {
    const PolyCone C = PolyCone::from_rays(2, {vec({1, 0}), vec({1, 1})});
    const PolyCone D = dual_cone(C);
    CHECK(D.rays().size() == 2);
    CHECK(has_direction(D.rays(), vec({0, 1})));
    CHECK(has_direction(D.rays(), vec({1, -1})));

    std::mt19937_64 rng(301);
    int mismatches = 0;
    for (int k = 0; k < 10000; ++k) {
        const Vec y = oracle::sphere_sample(2, rng);
        const double s = std::min(y[0], y[0] + y[1]);
        if (std::abs(s) < 1e-6) continue;
        if (D.contains(y) != (s >= 0)) ++mismatches;
    }
    CHECK(mismatches == 0);
}

TEST_CASE("zero and full cones are dual to each other") {
    CHECK(dual_cone(PolyCone::zero(2)).is_full());
    CHECK(dual_cone(PolyCone::full(3)).is_zero());
}

TEST_CASE("membership classes") {
    const PolyCone K = PolyCone::orthant(2);
    CHECK(membership(K, vec({1, 1})) == Membership::Interior);
    CHECK(membership(K, vec({1, 0})) == Membership::Boundary);
    CHECK(membership(K, vec({-1, 1})) == Membership::Outside);
}

TEST_CASE("pointed and solid flags") {
    const PolyCone half = PolyCone::from_halfspaces(2, {vec({0, 1})});
    CHECK(half.solid());
    CHECK_FALSE(half.pointed());
    const PolyCone ray = PolyCone::from_rays(2, {vec({1, 0})});
    CHECK(ray.pointed());
    CHECK_FALSE(ray.solid());
    CHECK(PolyCone::orthant(3).pointed());
    CHECK(PolyCone::orthant(3).solid());
    CHECK_THROWS_AS(PolyCone::from_rays(2, {vec({1, 0, 0})}), DimensionMismatch);
}

TEST_CASE("facet normals of a generated cone") {
    const auto f = cone_facets(2, {vec({1, 0}), vec({1, 1})});
    CHECK(f.size() == 2);
    CHECK(has_direction(f, vec({0, 1})));
    CHECK(has_direction(f, vec({1, -1})));

    const auto flat = cone_facets(3, {vec({1, 0, 0}), vec({0, 1, 0})});
    CHECK(has_direction(flat, vec({0, 0, 1})));
    CHECK(has_direction(flat, vec({0, 0, -1})));
    CHECK(has_direction(flat, vec({1, 0, 0})));
    CHECK(has_direction(flat, vec({0, 1, 0})));
}

TEST_CASE("dual pairing is nonnegative") {
    std::mt19937_64 rng(302);
    for (int k = 0; k < 1000; ++k) {
        const int dim = 2 + k % 3;
        const PolyCone C = suites::random_cone(dim, rng);
        const PolyCone D = dual_cone(C);
        const Vec y = random_member(C.rays(), rng);
        const Vec ys = random_member(D.rays(), rng);
        CHECK(ys.dot(y) >= -tol().eps_cmp);
    }
}

TEST_CASE("dual of the dual recovers membership") {
    std::mt19937_64 rng(303);
    int probes = 0;
    for (int c = 0; c < 20; ++c) {
        const int dim = 2 + c % 3;
        const PolyCone C = suites::random_cone(dim, rng);
        const PolyCone CC = dual_cone(dual_cone(C));
        for (int k = 0; k < 50; ++k) {
            const Vec y = oracle::sphere_sample(dim, rng);
            if (std::abs(C.min_slack(y)) < 1e-7) continue;
            CHECK(CC.contains(y) == C.contains(y));
            ++probes;
        }
    }
    CHECK(probes >= 990);
}

TEST_CASE("Bishop-Phelps dual membership examples") {
    const BPCone bp{vec({2, 0})};
    CHECK(bp_dual_member(bp, vec({2, 1})));
    CHECK_FALSE(bp_dual_member(bp, vec({0, 1})));
    CHECK(bp_dual_member(bp, vec({2, 0})));

    // (1, -sqrt 3) lies in the cone and pairs negatively with (0, 1)
    const Vec w = vec({1, -std::sqrt(3.0)});
    CHECK(bp.contains(w));
    CHECK(vec({0, 1}).dot(w) < 0);

    std::mt19937_64 rng(304);
    CHECK(bp_sampled_min(bp.anchor, vec({2, 1}), rng) >= -1e-12);
    CHECK(bp_sampled_min(bp.anchor, vec({0, 1}), rng) < -0.5);
}

TEST_CASE("short anchors") {
    const BPCone bp{vec({1, 0})};
    CHECK_THROWS_AS(bp_dual_member(bp, vec({1, 0})), AnchorTooShort);
    const BpDecision in = bp_dual_member_checked(bp, vec({1, 0}));
    CHECK_FALSE(in.exact);
    CHECK(in.member);
    const BpDecision out = bp_dual_member_checked(bp, vec({-1, 0}));
    CHECK_FALSE(out.exact);
    CHECK_FALSE(out.member);
    CHECK(bp_dual_member_checked(BPCone{vec({2, 0})}, vec({2, 1})).exact);
}

TEST_CASE("Bishop-Phelps dual against the sampled definition") {
    // Every probe is decided by the angular formula min = cos(theta + alpha) over the cap;
    // the first 40 per anchor are also decided by 1e5 cap samples.
    std::mt19937_64 rng(305);
    int compared = 0;
    for (int dim = 2; dim <= 3; ++dim) {
        for (double len : {1.5, 2.0, 4.0}) {
            const BPCone bp{len * oracle::sphere_sample(dim, rng)};
            const Vec a = bp.anchor.normalized();
            const double alpha = std::acos(1.0 / len);
            for (int k = 0; k < 500; ++k) {
                const Vec ys = oracle::sphere_sample(dim, rng);
                const double theta = std::atan2((ys - ys.dot(a) * a).norm(), ys.dot(a));
                const double angular = theta + alpha >= M_PI ? -1.0 : std::cos(theta + alpha);
                if (std::abs(angular) < 1e-3) continue;
                const bool member = bp_dual_member(bp, ys);
                CHECK(member == (angular >= -tol().eps_cmp));
                if (k < 40) CHECK(member == (bp_sampled_min(bp.anchor, ys, rng) >= -tol().eps_cmp));
                ++compared;
            }
        }
    }
    CHECK(compared >= 2900);
}

}
