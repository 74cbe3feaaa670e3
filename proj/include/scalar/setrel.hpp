#pragma once

#include <optional>
#include <vector>

#include "scalar/cone.hpp"
#include "scalar/polytope.hpp"

namespace scalar {

enum class RelTag { Lower, Upper, Set };
enum class Strictness { Weak, Punctured, Interior };

/// lower: G subset of H + D. upper: H subset of G - D. set: both.
/// Punctured uses D minus {0}, Interior uses int D (requires D solid).
struct RelationKind {
    RelTag tag = RelTag::Set;
    Strictness strictness = Strictness::Weak;
};

enum class Truth { True, False, Unknown, NotApplicable };

const char* to_string(Truth t);

/// Is H related to G (H "less than" G) with respect to D? Decided vertex-wise by LP.
Truth relate(const Polytope& H, const Polytope& G, const PolyCone& D, RelationKind kind);

enum class FaceVerdict { Holds, HoldsSampled, Fails, Unknown, NotApplicable };

const char* to_string(FaceVerdict v);

struct FaceRelation {
    FaceVerdict verdict = FaceVerdict::Holds;
    std::optional<Vec> witness;  // direction y whose faces fail to relate
    bool holds() const { return verdict == FaceVerdict::Holds || verdict == FaceVerdict::HoldsSampled; }
};

/// relate(H^y, G^y, D, kind) for a representative y of every fan cell.
FaceRelation y_face_relation_all(const Polytope& G, const Polytope& H, const PolyCone& D, RelationKind kind);

/// Vertices v of P with no p in P such that v - p lies in D minus {0}.
std::vector<Vec> minimal_elements(const Polytope& P, const PolyCone& D);

}  // namespace scalar
