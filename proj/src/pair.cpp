#include "toric/pair.hpp"

#include <algorithm>

#include "toric/error.hpp"

namespace toric {

namespace {

void require_complete(const Fan& fan) {
  if (!fan.complete) fail("IncompleteFan", "operation requires a complete fan");
}

// Rays as rows: the r x n matrix whose integer column span is the lattice
// of principal invariant divisors { (<m, u_rho>)_rho : m in M }.
IntMat principal_matrix(const Fan& fan) {
  IntMat m(fan.ray_count(), fan.rank);
  for (int i = 0; i < fan.ray_count(); ++i)
    for (int j = 0; j < fan.rank; ++j) m.at(i, j) = fan.rays[i][j];
  return m;
}

RatVec log_canonical_class(const ToricPair& pair) {
  RatVec v(pair.fan.ray_count());
  for (int i = 0; i < pair.fan.ray_count(); ++i) v[i] = pair.coeffs[i] - 1;
  return v;
}

RatVec log_canonical_class(const NumericalPair& pair) {
  RatVec v(pair.fan.ray_count(), Rat(-1));
  for (const auto& comp : pair.components) {
    Rat f = comp.coeff * Rat(comp.count);
    for (int i = 0; i < pair.fan.ray_count(); ++i) v[i] += f * Rat(comp.cls[i]);
  }
  return v;
}

}  // namespace

ToricPair make_toric_pair(Fan fan, RatVec coeffs) {
  if (static_cast<int>(coeffs.size()) != fan.ray_count())
    fail("ValidationError", "need exactly one coefficient per ray");
  bool boundary = true;
  for (const Rat& c : coeffs)
    if (c < 0 || c > 1) boundary = false;
  return ToricPair{std::move(fan), std::move(coeffs), boundary};
}

NumericalPair make_numerical_pair(Fan fan, std::vector<NumericalComponent> components) {
  for (const auto& comp : components) {
    if (static_cast<int>(comp.cls.size()) != fan.ray_count())
      fail("ValidationError", "component class must be a ray-indexed vector");
    if (comp.count <= 0) fail("ValidationError", "component count must be positive");
    if (comp.coeff < 0 || comp.coeff > 1)
      fail("CoefficientRange", "component coefficient must lie in [0,1]");
  }
  return NumericalPair{std::move(fan), std::move(components)};
}

Rat complexity(const ToricPair& pair) {
  require_complete(pair.fan);
  Rat total(0);
  for (const Rat& c : pair.coeffs) total += c;
  return Rat(pair.fan.ray_count()) - total;
}

Rat complexity(const NumericalPair& pair) {
  require_complete(pair.fan);
  Rat total(0);
  for (const auto& comp : pair.components) total += comp.coeff * Rat(comp.count);
  return Rat(pair.fan.ray_count()) - total;
}

std::optional<Int> index(const ToricPair& pair) {
  require_complete(pair.fan);
  return lattice_membership(principal_matrix(pair.fan), log_canonical_class(pair));
}

std::optional<Int> index(const NumericalPair& pair) {
  require_complete(pair.fan);
  // The class condition determines m up to the subgroup m0 Z; on top of it,
  // m must clear the coefficient of every general prime in B, and distinct
  // general primes cannot merge, so the denominators enter via their lcm.
  auto m0 = lattice_membership(principal_matrix(pair.fan), log_canonical_class(pair));
  if (!m0) return std::nullopt;
  Int m = *m0;
  for (const auto& comp : pair.components) m = lcm(m, denom(comp.coeff));
  return m;
}

PairReport pair_report(const ToricPair& pair) {
  PairReport r;
  r.complexity = complexity(pair);
  r.index = index(pair);
  bool lc = is_lc(pair);
  r.lc = lc ? Tri::True : Tri::False;
  r.log_cy = lc && r.index.has_value();
  return r;
}

PairReport pair_report(const NumericalPair& pair) {
  PairReport r;
  r.complexity = complexity(pair);
  r.index = index(pair);
  // Components are general members of their linear systems; log canonicity
  // is not decidable from the numerical data alone.
  r.lc = Tri::Unknown;
  r.log_cy = r.index.has_value();
  return r;
}

Rat log_discrepancy(const ToricPair& pair, const IntVec& v) {
  if (static_cast<int>(v.size()) != pair.fan.rank) fail("ValidationError", "point has wrong length");
  if (is_zero(v) || !is_primitive(v)) fail("NonPrimitive", vec_to_string(v));
  auto ci = pair.fan.max_cone_containing(v);
  if (!ci) fail("NotInSupport", vec_to_string(v) + " lies outside the fan support");
  RatVec bary = *pair.fan.barycentric(*ci, v);
  const Cone& cone = pair.fan.max_cones[*ci];
  Rat a(0);
  for (size_t i = 0; i < cone.rays.size(); ++i)
    a += bary[i] * (Rat(1) - pair.coeffs[cone.rays[i]]);
  return a;
}

bool is_lc(const ToricPair& pair) {
  for (const Rat& c : pair.coeffs)
    if (c > 1) return false;
  return true;
}

std::vector<Cone> lc_centers(const ToricPair& pair) {
  if (!is_lc(pair)) fail("NotLC", "pair is not log canonical");
  std::vector<Cone> out;
  for (const Stratum& s : orbit_strata(pair.fan)) {
    if (s.cone_dim == 0) continue;
    bool all_one = true;
    for (int r : s.cone.rays)
      if (pair.coeffs[r] != 1) {
        all_one = false;
        break;
      }
    if (all_one) out.push_back(s.cone);
  }
  return out;
}

ToricPair pullback_star_subdivision(const ToricPair& pair, const IntVec& v) {
  Rat a = log_discrepancy(pair, v);
  auto [fan, new_index] = star_subdivision(pair.fan, v);
  RatVec coeffs = pair.coeffs;
  coeffs.push_back(Rat(1) - a);
  (void)new_index;
  return make_toric_pair(std::move(fan), std::move(coeffs));
}

bool classes_equal(const Fan& fan, const RatVec& d1, const RatVec& d2, ClassMode mode) {
  require_complete(fan);
  if (d1.size() != d2.size() || static_cast<int>(d1.size()) != fan.ray_count())
    fail("ValidationError", "divisor vectors must be ray-indexed");
  RatVec diff(d1.size());
  for (size_t i = 0; i < d1.size(); ++i) diff[i] = d1[i] - d2[i];
  IntMat m = principal_matrix(fan);
  if (mode == ClassMode::Rational) return solve_rational(m, diff).has_value();
  IntVec b(diff.size());
  for (size_t i = 0; i < diff.size(); ++i) {
    if (!is_integer(diff[i])) return false;
    b[i] = numer(diff[i]);
  }
  return solve_integer(m, b).has_value();
}

Int divisor_sections(const Fan& fan, const IntVec& d) {
  require_complete(fan);
  if (static_cast<int>(d.size()) != fan.ray_count())
    fail("ValidationError", "divisor vector must be ray-indexed");
  int n = fan.rank;

  // Exact bounding box: expressing +-e_i inside a containing maximal cone
  // turns the ray inequalities into a bound on the i-th coordinate of the
  // section polytope. Completeness guarantees a containing cone exists.
  auto coordinate_bound = [&](int i, int sign) {
    IntVec w(n, Int(0));
    w[i] = sign;
    auto ci = fan.max_cone_containing(w);
    if (!ci) fail("UnboundedPolytope", "complete fan has no cone containing a basis direction");
    RatVec bary = *fan.barycentric(*ci, w);
    const Cone& cone = fan.max_cones[*ci];
    Rat bound(0);
    for (size_t k = 0; k < cone.rays.size(); ++k) bound += bary[k] * Rat(d[cone.rays[k]]);
    return bound;  // sign<0: m_i <= bound; sign>0: m_i >= -bound
  };

  std::vector<Int> lo(n), hi(n);
  for (int i = 0; i < n; ++i) {
    Rat upper = coordinate_bound(i, -1);
    Rat lower = -coordinate_bound(i, +1);
    Int u, l;
    mpz_fdiv_q(u.get_mpz_t(), numer(upper).get_mpz_t(), denom(upper).get_mpz_t());
    mpz_cdiv_q(l.get_mpz_t(), numer(lower).get_mpz_t(), denom(lower).get_mpz_t());
    lo[i] = l;
    hi[i] = u;
    if (l > u) return 0;
  }

  Int count(0);
  IntVec m(n);
  for (int i = 0; i < n; ++i) m[i] = lo[i];
  for (;;) {
    bool inside = true;
    for (int r = 0; r < fan.ray_count() && inside; ++r) {
      Int pairing(0);
      for (int i = 0; i < n; ++i) pairing += m[i] * fan.rays[r][i];
      if (pairing < -d[r]) inside = false;
    }
    if (inside) ++count;
    int k = 0;
    while (k < n) {
      ++m[k];
      if (m[k] <= hi[k]) break;
      m[k] = lo[k];
      ++k;
    }
    if (k == n) break;
  }
  return count;
}

}  // namespace toric
