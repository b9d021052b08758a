#pragma once

#include <optional>
#include <vector>

#include "toric/fibration.hpp"

namespace toric {

// Stage data for an iterated projective-space bundle: stage i adds the
// bundle P(O + L_1 + ... + L_dim) with the line bundles given by integer
// twist vectors over the rays of the fan built so far. Stage 1 sits over a
// point, so its twist list is empty and it contributes a projective space.
struct BottStage {
  int dim = 0;
  std::vector<IntVec> twists;
};

struct BottTowerSpec {
  std::vector<BottStage> stages;
};

struct TowerReport {
  std::vector<int> stage_dims;            // base-most stage first
  std::vector<Fan> fans;                  // fans[i] is the stage-i total space
  std::vector<FanMorphism> morphisms;     // morphisms[i]: fans[i+1] -> fans[i]
};

// Iterated proj_bundle construction. Every level is verified to split, to be
// locally trivial, and to have projective-space fiber weights; the top fan
// is smooth and complete with rank = sum of stage dims and
// ray count = sum of (dim + 1).
TowerReport build_bott_tower(const BottTowerSpec& spec);

// Searches for a tower structure: candidate fiber ray subsets S with
// |S| = dim span(S) + 1 and sum of rays zero are tried in lexicographic
// ray-index order (shorter prefixes first); projecting along span(S) must
// give a morphism onto a complete smooth fan that splits and is locally
// trivial with projective-space fiber, and the base must recurse to a
// tower. First success wins, so the result is deterministic. Non-smooth
// fans return nullopt immediately. Only stage_dims is the committed
// comparison contract; fan identity up to lattice automorphism is not
// normalized.
std::optional<TowerReport> recognize_bott_tower(const Fan& fan);

struct IndexExample {
  Fan fan;
  NumericalPair pair;
};

// The rank-n bundle P(O + O(d)) over P^{n-1} carrying
// B = S + (1/m)(T_1 + ... + T_m + pullback of mn general hyperplanes):
// a numerically log Calabi-Yau pair of complexity zero and index exactly m.
// Requires d >= 1, n >= 2, m >= 3.
IndexExample build_index_example(int d, int n, int m);

}  // namespace toric
