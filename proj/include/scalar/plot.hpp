#pragma once

#include <functional>
#include <optional>
#include <string>

#include "scalar/cone.hpp"
#include "scalar/polytope.hpp"

namespace scalar {

/// Two panels: the dual space (K*, G, H, B, p*) and the primal space (-K and the level
/// lines Psi = -1, 0, 1 of a positively homogeneous Psi).
struct PlotScene {
    std::string title;
    PolyCone K;
    std::optional<Polytope> G, H, B;
    std::optional<Vec> p_star;
    std::function<double(const Vec&)> psi;
};

/// SVG 1.1 document. Throws DimensionMismatch unless the scene is planar.
std::string render_svg(const PlotScene& scene);

}  // namespace scalar
