#pragma once

#include <optional>
#include <vector>

#include "toric/pair.hpp"

namespace toric {

// Toric morphism: an integer lattice map (target_rank x source_rank) mapping
// every source cone into some target cone (verified on construction).
struct FanMorphism {
  Fan source;
  Fan target;
  IntMat matrix;
};

// Throws ValidationError naming the offending cone when some source cone's
// image is contained in no target cone.
FanMorphism make_fan_morphism(Fan source, Fan target, IntMat matrix);

// Splitting data: source rays partition into kernel (fiber) rays and the
// unique lifts of the target rays; target cones lift to source cones.
struct SplitResult {
  std::vector<int> fiber_rays;          // sorted source ray indices inside ker(f)
  std::vector<Cone> fiber_max_cones;    // distinct maximal kernel cones
  std::vector<int> lift;                // target ray index -> source ray index
  std::vector<Int> lift_multiple;       // f(u_lift) = k * u_target, k >= 1
  std::vector<Cone> section_cones;      // lifted target maximal cones
};

// Checked construction of the splitting. The morphism must be surjective on
// lattices and both fans complete; failure of the split structure itself is
// reported rather than assumed away (the split exists for extremal
// fibrations, and uniqueness of ray lifts is the operative condition).
// Throws: NotSurjective, NonUniqueLift, MissingLiftedCone.
SplitResult split_fan(const FanMorphism& f);

// True when the target is smooth and every lifted ray maps onto the
// primitive generator of its target ray; False when some lift maps to a
// proper multiple (the lattice saturation fails on that ray); Unknown for
// non-smooth targets, where this criterion does not decide.
Tri is_locally_trivial(const FanMorphism& f, const SplitResult& split);

struct FiberType {
  Fan fan;                                // fiber fan in kernel coordinates
  std::optional<std::vector<Int>> weights;  // ascending; present when rays = rank + 1
};

// Fiber fan in a deterministic SNF basis of ker(f) ∩ N. When the fiber fan
// has exactly rank+1 rays carrying a positive relation sum c_i u_i = 0, the
// primitive weight vector is returned sorted ascending.
FiberType fiber_type(const FanMorphism& f, const SplitResult& split);

struct BundleExtraction {
  IntMat section;                        // integer right inverse s of f
  std::vector<IntVec> fiber_basis;       // v_1..v_n, a lattice basis of ker ∩ N
  std::vector<IntVec> twists;            // [target ray][fiber index]: a_{tau,i}
  std::vector<IntVec> line_bundle_classes;  // n+1 ray vectors on the target; [0] = 0
};

// Solves w_tau = s(f(w_tau)) + sum_i a_{tau,i} v_i exactly for every lifted
// ray. The fiber basis is the fiber rays in descending lexicographic order
// with the last (lexicographically smallest, the ray -(v_1+..+v_n) of a
// standard bundle fan) dropped, so rebuilding through proj_bundle
// reproduces a fan built by it ray for ray. Class i carries entry
// -a_{tau,i} at each target ray; class 0 is trivial.
// Throws: NotLocallyTrivial, FiberNotProjectiveSpace.
BundleExtraction extract_line_bundles(const FanMorphism& f, const SplitResult& split);

// Reporting convenience: shift each twist column so its minimum is zero
// (twisting the bundle presentation), leaving nonnegative twists per
// summand.
std::vector<IntVec> normalized_twists(const BundleExtraction& e);

// Toric canonical-bundle-formula pushforward: the coefficient over a target
// ray is 1 - min (1 - b_tau)/k_tau over the source rays with
// f(u_tau) = k_tau u_sigma, the exact log canonical threshold over the
// generic point of the invariant divisor. The moduli part is trivial.
// Finite covers (non-surjective lattice maps, e.g. multiplication on P^1)
// are accepted; only a target ray with no source ray over it is rejected.
// Throws: NotLC, NoRayOver.
ToricPair cbf_pushforward(const ToricPair& pair, const FanMorphism& f);

}  // namespace toric
