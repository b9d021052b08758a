#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "toric/linalg.hpp"

namespace toric {

// Face of a simplicial fan, identified by the sorted indices of its rays in
// the owning fan's ray list. The empty set is the zero cone.
struct Cone {
  std::vector<int> rays;

  bool operator==(const Cone& o) const = default;
  auto operator<=>(const Cone& o) const = default;
};

// Complete data of a simplicial fan. Construct through validate_fan (full
// validation, for external input) or the standard_* builders; all operations
// assume the invariants hold. Values are immutable once built.
struct Fan {
  int rank = 0;
  std::vector<IntVec> rays;        // primitive, pairwise distinct
  std::vector<Cone> max_cones;     // each of dimension == rank
  bool complete = false;           // every facet shared by exactly two maximal cones
  bool smooth = false;             // every maximal cone unimodular

  int ray_count() const { return static_cast<int>(rays.size()); }
  std::optional<int> ray_index(const IntVec& v) const;

  // Barycentric coordinates of v in the given maximal cone, or nullopt when
  // v lies outside it. Exact rationals, all >= 0 when present.
  std::optional<RatVec> barycentric(int max_cone, const IntVec& v) const;

  // Lowest-index maximal cone containing v.
  std::optional<int> max_cone_containing(const IntVec& v) const;
};

// Full validation: primitive distinct rays, simplicial maximal cones of
// dimension rank, and the pairwise common-face condition. Completeness and
// smoothness are computed and stored as flags.
// Throws: NonPrimitiveRay, DuplicateRay, NonSimplicialCone,
// FaceIntersectionViolation, UnusedRay, ValidationError.
Fan validate_fan(int rank, std::vector<IntVec> rays, std::vector<std::vector<int>> max_cones);

bool is_smooth_cone(const Fan& fan, const Cone& cone);

// Star subdivision at a primitive v in the support of the fan. Returns the
// refined fan and the index of the new ray (always appended last).
// Throws: NonPrimitive, AlreadyARay, NotInSupport.
std::pair<Fan, int> star_subdivision(const Fan& fan, const IntVec& v);

struct Stratum {
  Cone cone;
  int cone_dim;     // = number of rays (simplicial)
  int stratum_dim;  // dimension of the corresponding orbit closure
};

// Every face of every maximal cone, deduplicated, including the zero cone;
// sorted by cone dimension then lexicographically by ray indices.
std::vector<Stratum> orbit_strata(const Fan& fan);

// Standard fans. Ray orders are deterministic and documented:
//   projective_space(n): e_1..e_n, then -(e_1+..+e_n).
//   weighted_projective(c_0..c_n): e_1..e_n, then the primitive u_0 with
//     c_0 u_0 + sum c_i e_i = 0 (requires the e-basis presentation to exist;
//     InvalidWeights otherwise).
//   product(f, g): f's rays then g's rays in the block coordinates.
//   proj_bundle(base, twists): fiber rays v_1..v_n, then v_0 = -(v_1+..+v_n),
//     then one lift (u_tau, a_tau1..a_taun) per base ray in base order.
//     Coordinates: base block first, fiber block last. twists[j-1] is the
//     integer vector a_.,j over the base rays.
Fan projective_space_fan(int n);
Fan weighted_projective_fan(const std::vector<Int>& weights);
Fan product_fan(const Fan& f, const Fan& g);
Fan proj_bundle_fan(const Fan& base, const std::vector<IntVec>& twists);

// Exact equality: same rank, identical ray list, same set of maximal cones.
bool same_fan(const Fan& a, const Fan& b);

}  // namespace toric
