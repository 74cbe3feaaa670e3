#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "scalar/scalarize.hpp"

namespace scalar {

/// Malformed fixture text or an inconsistent fixture (wrong dimensions, dangling names).
class FixtureError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ConeSpec {
    std::string kind;  // "rays" or "halfspaces"
    std::vector<Vec> vectors;
};

struct FunctionalSpec {
    std::string variant;              // "GW", "HU", "DS" or "QD"
    std::optional<Vec> r;             // GW
    std::optional<std::string> ball;  // HU: name of a polytope; Euclidean when absent
    std::optional<std::string> G, H;  // DS uses G, QD uses both
};

/// JSON fixture:
///   {"dim": 2, "cone": {"rays": [[1,0],[0,1]]}, "polytopes": {"G": {"vertices": [...]}},
///    "functionals": {"psi": {"variant": "QD", "G": "G", "H": "H"}}, "seed": 7, "samples": 1000,
///    "tolerances": {"eps_cmp": 1e-7}}
/// Only "dim" is required. Without a cone the nonnegative orthant is used.
struct Fixture {
    int dim = 0;
    std::optional<ConeSpec> cone;
    std::map<std::string, std::vector<Vec>> polytopes;
    std::map<std::string, FunctionalSpec> functionals;
    std::optional<std::uint64_t> seed;
    std::optional<int> samples;
    std::map<std::string, double> tolerances;  // keys eps_feas, eps_cmp, eps_strict

    PolyCone ordering_cone() const;
    /// Throws FixtureError for an unknown name.
    Polytope polytope(const std::string& name) const;
    ScalFun functional(const std::string& name) const;
    /// Current tolerances with this fixture's overrides applied.
    Tolerances apply_tolerances(Tolerances base) const;
};

Fixture parse_fixture(const std::string& text);
Fixture load_fixture(const std::string& path);

/// Sorted keys, two-space indent, numbers as %.12g.
std::string emit_fixture(const Fixture& fx);

/// %.12g, with negative zero printed as 0.
std::string format_number(double x);

}  // namespace scalar
