#pragma once

#include <optional>
#include <vector>

#include "toric/fan.hpp"

namespace toric {

// Pair (X, B) with torus-invariant boundary B = sum b_rho D_rho, one exact
// rational coefficient per ray. Coefficients may be arbitrary rationals
// (sub-pairs are allowed); `boundary` records whether all lie in [0,1].
struct ToricPair {
  Fan fan;
  RatVec coeffs;
  bool boundary = false;
};

ToricPair make_toric_pair(Fan fan, RatVec coeffs);

// Boundary component known only up to linear equivalence: `count` distinct
// general prime divisors of class `cls` (a representative ray vector), each
// with coefficient `coeff`.
struct NumericalComponent {
  IntVec cls;
  Rat coeff;
  Int count;
};

struct NumericalPair {
  Fan fan;
  std::vector<NumericalComponent> components;
};

NumericalPair make_numerical_pair(Fan fan, std::vector<NumericalComponent> components);

enum class Tri { False, True, Unknown };

struct PairReport {
  Rat complexity;
  std::optional<Int> index;  // nullopt = not log Calabi-Yau
  Tri lc = Tri::Unknown;
  bool log_cy = false;
};

// complexity = dim + rank WDiv_alg - |B| = ray_count - |B|, the free rank of
// the class group of a complete toric variety being ray_count - dim.
Rat complexity(const ToricPair& pair);
Rat complexity(const NumericalPair& pair);

// Smallest m >= 1 with m(K_X + B) an integral divisor linearly equivalent to
// zero, through the lattice of principal invariant divisors; nullopt when
// K_X + B is not a torsion class.
std::optional<Int> index(const ToricPair& pair);
std::optional<Int> index(const NumericalPair& pair);

PairReport pair_report(const ToricPair& pair);
PairReport pair_report(const NumericalPair& pair);

// Log discrepancy of the invariant valuation at primitive v: write
// v = sum lambda_i u_i inside a cone containing v and return
// sum lambda_i (1 - b_i). Defined for primitive v only; the same formula
// without the primitivity normalization is the homogeneous extension
// (additive within cones, with value k * A(v) at k*v), which the property
// tests use.
Rat log_discrepancy(const ToricPair& pair, const IntVec& v);

bool is_lc(const ToricPair& pair);

// Nonzero cones all of whose rays carry coefficient 1 (the strata of the
// floor of B). Requires the pair to be lc.
std::vector<Cone> lc_centers(const ToricPair& pair);

// Crepant pullback along the star subdivision at v: coefficients carry over
// and the new ray gets 1 - log_discrepancy(pair, v).
ToricPair pullback_star_subdivision(const ToricPair& pair, const IntVec& v);

enum class ClassMode { Integral, Rational };

// Whether d1 - d2 is a principal (resp. Q-principal) invariant divisor,
// i.e. lies in the integral (resp. rational) row space of the ray matrix.
bool classes_equal(const Fan& fan, const RatVec& d1, const RatVec& d2, ClassMode mode);

// Number of lattice points of { m : <m, u_rho> >= -d_rho for all rays },
// i.e. h^0 of the divisor sum d_rho D_rho on a complete fan.
Int divisor_sections(const Fan& fan, const IntVec& d);

}  // namespace toric
