#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "scalar/cone.hpp"
#include "scalar/numkernel.hpp"

namespace scalar {

/// <normal, x> <= offset, with a unit normal.
struct Halfspace {
    Vec normal;
    double offset = 0.0;
};

/// Bounded convex set with synchronized vertex and halfspace representations.
/// Lower-dimensional sets carry their affine hull as opposite halfspace pairs.
class Polytope {
public:
    Polytope() = default;
    Polytope(int dim, std::vector<Vec> vertices, std::vector<Halfspace> halfspaces, int aff_dim);

    static Polytope point(const Vec& p);
    static Polytope interval(double lo, double hi);
    static Polytope box(const Vec& lo, const Vec& hi);

    int dim() const { return dim_; }
    int aff_dim() const { return aff_dim_; }
    const std::vector<Vec>& vertices() const { return vertices_; }
    const std::vector<Halfspace>& halfspaces() const { return halfspaces_; }
    std::size_t size() const { return vertices_.size(); }

    /// Largest halfspace violation at x (<= 0 inside).
    double violation(const Vec& x) const;
    bool contains(const Vec& x) const;
    double support_value(const Vec& y) const;
    double max_vertex_norm() const;
    double min_vertex_norm() const;

    Polytope scaled(double s) const;
    Polytope translated(const Vec& t) const;

private:
    int dim_ = 0;
    std::vector<Vec> vertices_;
    std::vector<Halfspace> halfspaces_;
    int aff_dim_ = 0;
};

/// nullopt stands for the empty set.
using MaybePolytope = std::optional<Polytope>;

/// Convex hull with an irredundant vertex list. Throws EmptyInput.
Polytope hull(const std::vector<Vec>& points);

/// Bounded intersection of halfspaces; nullopt when infeasible. Throws Unbounded.
MaybePolytope from_halfspaces(int dim, const std::vector<Halfspace>& hs);

struct Support {
    double value = 0.0;
    Polytope face;
    std::vector<int> face_indices;
};

Support support(const Polytope& P, const Vec& y);

/// Vertex indices of P attaining sigma_P(y) within eps_cmp.
std::vector<int> argmax_vertices(const Polytope& P, const Vec& y);

Polytope minkowski_sum(const Polytope& P, const Polytope& Q);

/// {x : x + H subset of G}.
MaybePolytope pontryagin_diff(const Polytope& G, const Polytope& H);

/// inner subset of outer (vertex containment).
bool contains_polytope(const Polytope& outer, const Polytope& inner);
bool same_set(const Polytope& P, const Polytope& Q);

/// A cell of the common refinement of the normal fans of G and H.
struct FanCell {
    Vec representative;            // unit direction in the relative interior
    std::vector<int> g_face;       // argmax vertex indices of G
    std::vector<int> h_face;       // argmax vertex indices of H
    int cell_dim = 0;
    std::vector<Vec> generators;   // generators of the closed cell (empty in sampled mode)

    bool full_dim(int dim) const { return cell_dim == dim; }
};

struct Fan {
    std::vector<FanCell> cells;
    bool sampled = false;
};

/// Exact for dim <= 3 (cells of every dimension >= 1); sampled above.
Fan fan_refinement(const Polytope& G, const Polytope& H, int n_sample = 512, std::uint64_t seed = 11);

/// base + recession.
struct GenPolyhedron {
    Polytope base;
    PolyCone recession;

    std::vector<Halfspace> halfspaces() const;
    bool contains(const Vec& x) const;
};

}  // namespace scalar
