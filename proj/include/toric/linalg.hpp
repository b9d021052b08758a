#pragma once

#include <optional>
#include <vector>

#include "toric/numeric.hpp"

namespace toric {

// Dense arbitrary-precision integer matrix, row-major.
struct IntMat {
  int rows = 0;
  int cols = 0;
  std::vector<Int> a;

  IntMat() = default;
  IntMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, Int(0)) {}

  Int& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const Int& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

  static IntMat identity(int n);
  IntMat transposed() const;

  bool operator==(const IntMat& o) const = default;
};

IntMat mat_mul(const IntMat& x, const IntMat& y);
IntVec mat_apply(const IntMat& m, const IntVec& v);

// Matrix whose columns are the given vectors.
IntMat mat_from_columns(const std::vector<IntVec>& cols);
IntMat mat_from_rows(const std::vector<IntVec>& rows);

// Exact determinant (Bareiss fraction-free elimination).
Int det(const IntMat& m);

bool is_unimodular(const IntMat& m);

Int vec_gcd(const IntVec& v);

// v / gcd(|coords|); sign preserved. Throws ZeroVector on the zero vector.
IntVec primitive_vector(const IntVec& v);

bool is_zero(const IntVec& v);
bool is_primitive(const IntVec& v);

// Smith normal form u*a*v = d with u, v unimodular and d diagonal with
// nonnegative entries d0 | d1 | ... . Pivoting is deterministic: the
// smallest-absolute-value nonzero entry of the working submatrix, ties
// broken by lowest row then lowest column index.
struct Snf {
  IntMat u, d, v;
};

Snf smith_normal_form(const IntMat& a);

// Rank over Q.
int rank(const IntMat& m);

// One solution of a x = b over the rationals, or nullopt if inconsistent.
// Free coordinates are set to zero.
std::optional<RatVec> solve_rational(const IntMat& a, const RatVec& b);

// One solution of a x = b over the integers, or nullopt if none exists.
std::optional<IntVec> solve_integer(const IntMat& a, const IntVec& b);

// Basis of ker(a) ∩ Z^cols as a saturated sublattice (columns of the SNF
// right transform), deterministic.
std::vector<IntVec> kernel_lattice_basis(const IntMat& a);

// Integer right inverse s with a*s = identity, or nullopt when a is not
// surjective over Z (some SNF diagonal entry != 1).
std::optional<IntMat> integer_right_inverse(const IntMat& a);

// Smallest positive integer m such that m*b is an integer vector lying in
// the integer column span of a; nullopt when no such m exists at all.
// Throws BoundExceeded when the minimal m provably exceeds `bound`.
// Computed exactly through the SNF; never by trial iteration over m.
std::optional<Int> lattice_membership(const IntMat& a, const RatVec& b,
                                      const Int& bound = Int(1000000));

}  // namespace toric
