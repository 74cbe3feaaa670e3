#pragma once

#include <cstdint>
#include <vector>

#include "scalar/numkernel.hpp"

namespace scalar {

/// Closed convex polyhedral cone {x : <a_i, x> >= 0} = cone(rays).
/// Rays and facet normals are unit vectors. A lineality space shows up as
/// +/- pairs among the rays, a lower-dimensional cone as +/- pairs among the facets.
class PolyCone {
public:
    PolyCone() = default;

    static PolyCone from_rays(int dim, const std::vector<Vec>& generators);
    static PolyCone from_halfspaces(int dim, const std::vector<Vec>& normals);
    static PolyCone orthant(int dim);
    static PolyCone zero(int dim);
    static PolyCone full(int dim);

    int dim() const { return dim_; }
    const std::vector<Vec>& rays() const { return rays_; }
    const std::vector<Vec>& facets() const { return facets_; }
    bool pointed() const { return pointed_; }
    bool solid() const { return solid_; }
    bool is_full() const { return facets_.empty(); }
    bool is_zero() const { return rays_.empty(); }

    /// min_i <a_i, y>; +inf for the full space.
    double min_slack(const Vec& y) const;
    /// Membership within eps_feas (scaled by |y|).
    bool contains(const Vec& y) const;
    PolyCone negated() const;

private:
    int dim_ = 0;
    std::vector<Vec> rays_;
    std::vector<Vec> facets_;
    bool pointed_ = true;
    bool solid_ = false;
};

enum class Membership { Interior, Boundary, Outside };

PolyCone dual_cone(const PolyCone& C);

/// Classification by the minimum facet slack against +/- eps_strict.
Membership membership(const PolyCone& C, const Vec& y);

/// Bishop-Phelps cone {y : <anchor, y> >= |y|}.
struct BPCone {
    Vec anchor;
    bool contains(const Vec& y) const;
};

/// Closed-form dual membership: exists t >= 0 with |y* - t anchor| <= t.
/// Throws AnchorTooShort when |anchor| <= 1.
bool bp_dual_member(const BPCone& bp, const Vec& ystar);

struct BpDecision {
    bool member = false;
    bool exact = true;  // false when the sampled closure check was used
};

/// bp_dual_member with a sampled fallback for |anchor| <= 1 (reported as non-exact).
BpDecision bp_dual_member_checked(const BPCone& bp, const Vec& ystar, int samples = 20000,
                                  std::uint64_t seed = 7);

/// Normals a (unit) with <a, g> >= 0 for every generator, tight on a facet of cone(generators).
/// Includes +/- pairs spanning the orthogonal complement of span(generators).
std::vector<Vec> cone_facets(int dim, const std::vector<Vec>& generators);

}  // namespace scalar
