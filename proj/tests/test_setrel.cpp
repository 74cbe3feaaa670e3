#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "scalar/scalarize.hpp"
#include "scalar/setrel.hpp"
#include "scalar/suites.hpp"

using namespace scalar;
using oracle::vec;

namespace {

constexpr RelationKind kSet{RelTag::Set, Strictness::Weak};
constexpr RelationKind kLower{RelTag::Lower, Strictness::Weak};
constexpr RelationKind kUpper{RelTag::Upper, Strictness::Weak};

Vec random_in(int dim, double lo, double hi, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> U(lo, hi);
    Vec v(dim);
    for (int i = 0; i < dim; ++i) v[i] = U(rng);
    return v;
}

bool contains_point(const std::vector<Vec>& vs, const Vec& p) {
    for (const auto& v : vs) {
        if ((v - p).norm() < 1e-9) return true;
    }
    return false;
}

}  // namespace

TEST_SUITE("setrel") {

TEST_CASE("interval relations") {
    const PolyCone D = PolyCone::orthant(1);
    CHECK(relate(Polytope::interval(0, 1), Polytope::interval(2, 2.5), D, kSet) == Truth::True);
    CHECK(relate(Polytope::interval(2, 3), Polytope::interval(0, 1), D, kUpper) == Truth::False);
}

TEST_CASE("lower relation from the origin tests inclusion in the cone") {
    const PolyCone Kd = PolyCone::orthant(2);
    const Polytope O = Polytope::point(vec({0, 0}));
    CHECK(relate(O, hull({vec({1, 0}), vec({0, 1})}), Kd, kLower) == Truth::True);
    CHECK(relate(O, hull({vec({1, 0}), vec({-0.5, 1})}), Kd, kLower) == Truth::False);
}

TEST_CASE("strict variants") {
    const PolyCone D = PolyCone::orthant(2);
    const Polytope O = Polytope::point(vec({0, 0}));
    CHECK(relate(O, Polytope::point(vec({1, 1})), D, {RelTag::Lower, Strictness::Interior}) == Truth::True);
    CHECK(relate(O, Polytope::point(vec({1, 0})), D, {RelTag::Lower, Strictness::Interior}) == Truth::False);
    CHECK(relate(O, Polytope::point(vec({1, 0})), D, {RelTag::Lower, Strictness::Punctured}) == Truth::True);
    CHECK(relate(O, O, D, {RelTag::Lower, Strictness::Punctured}) == Truth::False);
    const PolyCone ray = PolyCone::from_rays(2, {vec({1, 0})});
    CHECK(relate(O, Polytope::point(vec({1, 0})), ray, {RelTag::Lower, Strictness::Interior}) == Truth::NotApplicable);
}

TEST_CASE("face relations") {
    const FaceRelation one = y_face_relation_all(Polytope::interval(2, 2.5), Polytope::interval(0, 1),
                                                 PolyCone::orthant(1), kSet);
    CHECK(one.verdict == FaceVerdict::Holds);

    const FaceRelation fail = y_face_relation_all(hull({vec({1, 0}), vec({0, 1})}), Polytope::point(vec({0.2, 0.2})),
                                                  PolyCone::orthant(2), kSet);
    CHECK(fail.verdict == FaceVerdict::Fails);
    REQUIRE(fail.witness.has_value());
    // the witness exposes a face of G that does not dominate (0.2, 0.2)
    const Vec y = *fail.witness;
    const Polytope G = hull({vec({1, 0}), vec({0, 1})});
    const Support s = support(G, y);
    CHECK(relate(Polytope::point(vec({0.2, 0.2})), s.face, PolyCone::orthant(2), kSet) == Truth::False);

    // a generator of the dual cone paired with the origin
    const PolyCone K = PolyCone::from_rays(2, {vec({1, 0}), vec({1, 2})});
    const PolyCone Kd = dual_cone(K);
    const Polytope Gen = gw_subdiff0(K, vec({1, 0.5}));
    CHECK(y_face_relation_all(Gen, Polytope::point(vec({0, 0})), Kd, kSet).holds());
}

TEST_CASE("minimal elements") {
    const PolyCone D = PolyCone::orthant(2);
    const auto m1 = minimal_elements(hull({vec({0, 0}), vec({1, 0}), vec({0, 1})}), D);
    CHECK(m1.size() == 1);
    CHECK(contains_point(m1, vec({0, 0})));
    const auto m2 = minimal_elements(hull({vec({1, 0}), vec({0, 1})}), D);
    CHECK(m2.size() == 2);
    const auto m3 = minimal_elements(Polytope::point(vec({3, 4})), D);
    CHECK(m3.size() == 1);
    CHECK(contains_point(m3, vec({3, 4})));
    CHECK_THROWS_AS(minimal_elements(Polytope::point(vec({0, 0})), PolyCone::from_halfspaces(2, {vec({0, 1})})),
                    NotPointed);
}

TEST_CASE("upper relation is domination of support functions on the cone") {
    // In the plane sigma_G - sigma_H is linear between the edge normals of G and H,
    // so checking the edge normals inside K and the rays of K is exact.
    std::mt19937_64 rng(501);
    std::uniform_real_distribution<double> W(0, 1);
    int holds = 0, fails = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const PolyCone K = suites::random_cone(2, rng);
        const Polytope G = suites::random_polytope(2, 6, random_in(2, -0.5, 1.5, rng), 1.0, rng);
        const Polytope H = suites::random_polytope(2, 5, random_in(2, -0.5, 0.5, rng), 0.8, rng);
        std::vector<Vec> probes = K.rays();
        for (const auto* P : {&G, &H}) {
            for (const auto& e : oracle::hull_edges(P->vertices())) {
                if (K.contains(e.n)) probes.push_back(e.n);
            }
        }
        for (int k = 0; k < 500; ++k) probes.push_back(W(rng) * K.rays()[0] + W(rng) * K.rays()[1]);
        bool dominated = true;
        for (const auto& y : probes) {
            dominated = dominated && G.support_value(y) >= H.support_value(y) - tol().eps_cmp * (1 + y.norm());
        }
        const Truth t = relate(H, G, dual_cone(K), kUpper);
        REQUIRE(t != Truth::Unknown);
        CHECK((t == Truth::True) == dominated);
        (dominated ? holds : fails)++;
    }
    CHECK(holds > 10);
    CHECK(fails > 10);
}

TEST_CASE("upper, lower and set face relations agree") {
    std::mt19937_64 rng(502);
    int holds = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const PolyCone K = suites::random_cone(2, rng);
        const PolyCone Kd = dual_cone(K);
        const Polytope H = suites::random_polytope(2, 4, random_in(2, -0.3, 0.3, rng), 0.4, rng);
        Polytope G = suites::random_polytope(2, 5, random_in(2, -1, 1, rng), 0.8, rng);
        if (trial % 2 == 0) G = minkowski_sum(suites::random_generator(K, rng), H);
        const FaceRelation up = y_face_relation_all(G, H, Kd, kUpper);
        const FaceRelation lo = y_face_relation_all(G, H, Kd, kLower);
        const FaceRelation st = y_face_relation_all(G, H, Kd, kSet);
        CHECK(up.holds() == lo.holds());
        CHECK(up.holds() == st.holds());
        holds += up.holds();
    }
    CHECK(holds > 10);
    CHECK(holds < 90);
}

TEST_CASE("set relation is reflexive") {
    std::mt19937_64 rng(503);
    for (int trial = 0; trial < 50; ++trial) {
        const int dim = 2 + trial % 2;
        const PolyCone D = suites::random_cone(dim, rng);
        const Polytope P = suites::random_polytope(dim, 6, random_in(dim, -1, 1, rng), 1.0, rng);
        CHECK(relate(P, P, D, kSet) == Truth::True);
    }
}

TEST_CASE("dropping a vertex of H keeps the upper relation") {
    std::mt19937_64 rng(504);
    int kept = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const PolyCone D = suites::random_cone(2, rng);
        const Polytope G = suites::random_polytope(2, 6, random_in(2, 0, 1, rng), 1.0, rng);
        const Polytope H = suites::random_polytope(2, 5, random_in(2, -1, 0, rng), 0.7, rng);
        if (relate(H, G, D, kUpper) != Truth::True || H.size() < 2) continue;
        for (std::size_t drop = 0; drop < H.size(); ++drop) {
            std::vector<Vec> rest;
            for (std::size_t i = 0; i < H.size(); ++i) {
                if (i != drop) rest.push_back(H.vertices()[i]);
            }
            CHECK(relate(hull(rest), G, D, kUpper) == Truth::True);
        }
        ++kept;
    }
    CHECK(kept > 10);
}

}
