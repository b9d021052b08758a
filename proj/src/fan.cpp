#include "toric/fan.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "toric/error.hpp"
#include "toric/simplex.hpp"

namespace toric {

namespace {

IntMat cone_matrix(const Fan& fan, const std::vector<int>& cone_rays) {
  std::vector<IntVec> cols;
  cols.reserve(cone_rays.size());
  for (int r : cone_rays) cols.push_back(fan.rays[r]);
  IntMat m(fan.rank, static_cast<int>(cols.size()));
  for (int j = 0; j < m.cols; ++j)
    for (int i = 0; i < m.rows; ++i) m.at(i, j) = cols[j][i];
  return m;
}

// Flags only; assumes structural validity (used by the builders, which
// produce fans that are correct by construction).
void compute_flags(Fan& fan) {
  fan.smooth = true;
  for (const Cone& c : fan.max_cones) {
    Int d = det(cone_matrix(fan, c.rays));
    if (d != 1 && d != -1) {
      fan.smooth = false;
      break;
    }
  }
  std::map<std::vector<int>, int> facet_count;
  for (const Cone& c : fan.max_cones)
    for (size_t drop = 0; drop < c.rays.size(); ++drop) {
      std::vector<int> facet;
      for (size_t i = 0; i < c.rays.size(); ++i)
        if (i != drop) facet.push_back(c.rays[i]);
      ++facet_count[facet];
    }
  fan.complete = true;
  for (const auto& [facet, count] : facet_count)
    if (count != 2) {
      fan.complete = false;
      break;
    }
}

Fan assemble(int rank, std::vector<IntVec> rays, std::vector<Cone> cones) {
  Fan fan;
  fan.rank = rank;
  fan.rays = std::move(rays);
  fan.max_cones = std::move(cones);
  compute_flags(fan);
  return fan;
}

// Do sigma and tau intersect in the common face spanned by their shared
// rays? Tested through the separation criterion: a linear functional
// vanishing on the shared rays, strictly positive on the rest of sigma and
// strictly negative on the rest of tau, exists if and only if the cones
// meet properly. Shared-facet pairs get a direct sign test instead of an LP.
bool common_face_pair(const Fan& fan, const Cone& sigma, const Cone& tau) {
  std::vector<int> shared, only_s, only_t;
  std::set_intersection(sigma.rays.begin(), sigma.rays.end(), tau.rays.begin(), tau.rays.end(),
                        std::back_inserter(shared));
  std::set_difference(sigma.rays.begin(), sigma.rays.end(), shared.begin(), shared.end(),
                      std::back_inserter(only_s));
  std::set_difference(tau.rays.begin(), tau.rays.end(), shared.begin(), shared.end(),
                      std::back_inserter(only_t));
  if (only_s.empty() && only_t.empty()) return false;  // duplicate cone

  int n = fan.rank;
  if (static_cast<int>(shared.size()) == n - 1) {
    IntMat m(n - 1, n);
    for (int i = 0; i < n - 1; ++i)
      for (int j = 0; j < n; ++j) m.at(i, j) = fan.rays[shared[i]][j];
    std::vector<IntVec> ker = kernel_lattice_basis(m);
    if (ker.size() != 1) return false;  // shared rays dependent
    const IntVec& normal = ker[0];
    Int a(0), b(0);
    for (int j = 0; j < n; ++j) {
      a += normal[j] * fan.rays[only_s[0]][j];
      b += normal[j] * fan.rays[only_t[0]][j];
    }
    return (a > 0 && b < 0) || (a < 0 && b > 0);
  }

  // Free functional l = p - q, p,q >= 0, plus one surplus/slack per strict
  // inequality:  l.u = 0 (shared), l.u >= 1 (sigma only), l.u <= -1 (tau only).
  int nl = 2 * n;
  int ns = static_cast<int>(only_s.size());
  int nt = static_cast<int>(only_t.size());
  int nv = nl + ns + nt;
  std::vector<RatVec> rows;
  RatVec rhs;
  auto functional_row = [&](const IntVec& u) {
    RatVec row(nv, Rat(0));
    for (int j = 0; j < n; ++j) {
      row[j] = Rat(u[j]);
      row[n + j] = Rat(-u[j]);
    }
    return row;
  };
  for (int r : shared) {
    rows.push_back(functional_row(fan.rays[r]));
    rhs.push_back(Rat(0));
  }
  for (int k = 0; k < ns; ++k) {
    RatVec row = functional_row(fan.rays[only_s[k]]);
    row[nl + k] = Rat(-1);
    rows.push_back(std::move(row));
    rhs.push_back(Rat(1));
  }
  for (int k = 0; k < nt; ++k) {
    RatVec row = functional_row(fan.rays[only_t[k]]);
    row[nl + ns + k] = Rat(1);
    rows.push_back(std::move(row));
    rhs.push_back(Rat(-1));
  }
  return lp::feasible(rows, rhs);
}

}  // namespace

std::optional<int> Fan::ray_index(const IntVec& v) const {
  for (int i = 0; i < ray_count(); ++i)
    if (rays[i] == v) return i;
  return std::nullopt;
}

std::optional<RatVec> Fan::barycentric(int max_cone, const IntVec& v) const {
  const Cone& c = max_cones[max_cone];
  IntMat m = cone_matrix(*this, c.rays);
  RatVec b(rank);
  for (int i = 0; i < rank; ++i) b[i] = Rat(v[i]);
  auto sol = solve_rational(m, b);
  if (!sol) return std::nullopt;
  for (const Rat& x : *sol)
    if (x < 0) return std::nullopt;
  return sol;
}

std::optional<int> Fan::max_cone_containing(const IntVec& v) const {
  for (size_t i = 0; i < max_cones.size(); ++i)
    if (barycentric(static_cast<int>(i), v)) return static_cast<int>(i);
  return std::nullopt;
}

Fan validate_fan(int rank, std::vector<IntVec> rays, std::vector<std::vector<int>> max_cones) {
  if (rank < 1) fail("ValidationError", "fan rank must be positive");
  for (size_t i = 0; i < rays.size(); ++i) {
    if (static_cast<int>(rays[i].size()) != rank)
      fail("ValidationError", "ray " + std::to_string(i) + " has wrong length");
    if (is_zero(rays[i]) || !is_primitive(rays[i]))
      fail("NonPrimitiveRay", "ray " + std::to_string(i) + " = " + vec_to_string(rays[i]));
    for (size_t j = 0; j < i; ++j)
      if (rays[i] == rays[j])
        fail("DuplicateRay", "rays " + std::to_string(j) + " and " + std::to_string(i));
  }
  if (max_cones.empty()) fail("ValidationError", "fan needs at least one maximal cone");

  std::vector<Cone> cones;
  cones.reserve(max_cones.size());
  std::vector<bool> used(rays.size(), false);
  for (size_t ci = 0; ci < max_cones.size(); ++ci) {
    std::vector<int> c = max_cones[ci];
    std::sort(c.begin(), c.end());
    if (std::adjacent_find(c.begin(), c.end()) != c.end())
      fail("ValidationError", "cone " + std::to_string(ci) + " repeats a ray index");
    for (int r : c)
      if (r < 0 || r >= static_cast<int>(rays.size()))
        fail("ValidationError", "cone " + std::to_string(ci) + " has ray index out of range");
    if (static_cast<int>(c.size()) != rank)
      fail("NonSimplicialCone",
           "cone " + std::to_string(ci) + " does not have rank-many rays");
    for (int r : c) used[r] = true;
    cones.push_back(Cone{std::move(c)});
  }
  for (size_t i = 0; i < used.size(); ++i)
    if (!used[i]) fail("UnusedRay", "ray " + std::to_string(i) + " lies in no maximal cone");

  Fan fan;
  fan.rank = rank;
  fan.rays = std::move(rays);
  fan.max_cones = std::move(cones);

  for (size_t ci = 0; ci < fan.max_cones.size(); ++ci)
    if (det(cone_matrix(fan, fan.max_cones[ci].rays)) == 0)
      fail("NonSimplicialCone", "cone " + std::to_string(ci) + " has dependent rays");

  for (size_t i = 0; i < fan.max_cones.size(); ++i)
    for (size_t j = i + 1; j < fan.max_cones.size(); ++j) {
      if (fan.max_cones[i] == fan.max_cones[j])
        fail("FaceIntersectionViolation",
             "maximal cones " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
      if (!common_face_pair(fan, fan.max_cones[i], fan.max_cones[j]))
        fail("FaceIntersectionViolation",
             "maximal cones " + std::to_string(i) + " and " + std::to_string(j) +
                 " do not meet in a common face");
    }

  compute_flags(fan);
  return fan;
}

bool is_smooth_cone(const Fan& fan, const Cone& cone) {
  if (cone.rays.empty()) return true;
  Snf s = smith_normal_form(cone_matrix(fan, cone.rays));
  int k = static_cast<int>(cone.rays.size());
  if (k > fan.rank) return false;
  for (int i = 0; i < k; ++i)
    if (s.d.at(i, i) != 1) return false;
  return true;
}

std::pair<Fan, int> star_subdivision(const Fan& fan, const IntVec& v) {
  if (static_cast<int>(v.size()) != fan.rank) fail("ValidationError", "point has wrong length");
  if (is_zero(v) || !is_primitive(v)) fail("NonPrimitive", "subdivision point " + vec_to_string(v));
  if (fan.ray_index(v)) fail("AlreadyARay", vec_to_string(v) + " is already a ray");

  int new_index = fan.ray_count();
  std::vector<Cone> cones;
  bool hit = false;
  for (size_t ci = 0; ci < fan.max_cones.size(); ++ci) {
    auto bary = fan.barycentric(static_cast<int>(ci), v);
    if (!bary) {
      cones.push_back(fan.max_cones[ci]);
      continue;
    }
    hit = true;
    const std::vector<int>& cr = fan.max_cones[ci].rays;
    // Replace the cone by the joins of v with its facets not containing v,
    // i.e. drop exactly the rays with positive barycentric coordinate.
    for (size_t i = 0; i < cr.size(); ++i) {
      if ((*bary)[i] == 0) continue;
      std::vector<int> nc;
      for (size_t j = 0; j < cr.size(); ++j)
        if (j != i) nc.push_back(cr[j]);
      nc.push_back(new_index);
      std::sort(nc.begin(), nc.end());
      cones.push_back(Cone{std::move(nc)});
    }
  }
  if (!hit) fail("NotInSupport", vec_to_string(v) + " lies outside the fan support");

  std::vector<IntVec> rays = fan.rays;
  rays.push_back(v);
  return {assemble(fan.rank, std::move(rays), std::move(cones)), new_index};
}

std::vector<Stratum> orbit_strata(const Fan& fan) {
  std::set<std::vector<int>> faces;
  for (const Cone& c : fan.max_cones) {
    int k = static_cast<int>(c.rays.size());
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
      std::vector<int> face;
      for (int i = 0; i < k; ++i)
        if (mask & (1u << i)) face.push_back(c.rays[i]);
      faces.insert(std::move(face));
    }
  }
  std::vector<Stratum> out;
  for (const auto& f : faces) {
    int d = static_cast<int>(f.size());
    out.push_back(Stratum{Cone{f}, d, fan.rank - d});
  }
  std::sort(out.begin(), out.end(), [](const Stratum& a, const Stratum& b) {
    if (a.cone_dim != b.cone_dim) return a.cone_dim < b.cone_dim;
    return a.cone.rays < b.cone.rays;
  });
  return out;
}

Fan projective_space_fan(int n) {
  if (n < 1) fail("ValidationError", "projective space dimension must be positive");
  std::vector<IntVec> rays;
  for (int i = 0; i < n; ++i) {
    IntVec e(n, Int(0));
    e[i] = 1;
    rays.push_back(std::move(e));
  }
  IntVec last(n, Int(-1));
  rays.push_back(std::move(last));
  std::vector<Cone> cones;
  for (int drop = n; drop >= 0; --drop) {
    std::vector<int> c;
    for (int i = 0; i <= n; ++i)
      if (i != drop) c.push_back(i);
    cones.push_back(Cone{std::move(c)});
  }
  return assemble(n, std::move(rays), std::move(cones));
}

Fan weighted_projective_fan(const std::vector<Int>& weights) {
  int n = static_cast<int>(weights.size()) - 1;
  if (n < 1) fail("InvalidWeights", "need at least two weights");
  for (const Int& w : weights)
    if (w <= 0) fail("InvalidWeights", "weights must be positive");
  Int g(0);
  for (const Int& w : weights) g = gcd(g, w);
  if (g != 1) fail("InvalidWeights", "weights must have gcd 1");

  // Rays e_1..e_n and u_0 with c_0 u_0 = -(c_1,..,c_n). The presentation
  // with u_1..u_n a lattice basis exists exactly when c_0 divides each c_i
  // and the quotient vector is primitive.
  const Int& c0 = weights[0];
  IntVec u0(n);
  for (int i = 1; i <= n; ++i) {
    if (weights[i] % c0 != 0)
      fail("InvalidWeights", "weight " + weights[i].get_str() + " not divisible by c0 = " +
                                 c0.get_str() + "; no coordinate-basis fan presentation");
    u0[i - 1] = -weights[i] / c0;
  }
  if (!is_primitive(u0))
    fail("InvalidWeights", "derived ray " + vec_to_string(u0) + " is not primitive");

  std::vector<IntVec> rays;
  for (int i = 0; i < n; ++i) {
    IntVec e(n, Int(0));
    e[i] = 1;
    rays.push_back(std::move(e));
  }
  rays.push_back(std::move(u0));
  std::vector<Cone> cones;
  for (int drop = n; drop >= 0; --drop) {
    std::vector<int> c;
    for (int i = 0; i <= n; ++i)
      if (i != drop) c.push_back(i);
    cones.push_back(Cone{std::move(c)});
  }
  return assemble(n, std::move(rays), std::move(cones));
}

Fan product_fan(const Fan& f, const Fan& g) {
  int n = f.rank + g.rank;
  std::vector<IntVec> rays;
  for (const IntVec& r : f.rays) {
    IntVec v(n, Int(0));
    for (int i = 0; i < f.rank; ++i) v[i] = r[i];
    rays.push_back(std::move(v));
  }
  for (const IntVec& r : g.rays) {
    IntVec v(n, Int(0));
    for (int i = 0; i < g.rank; ++i) v[f.rank + i] = r[i];
    rays.push_back(std::move(v));
  }
  std::vector<Cone> cones;
  for (const Cone& a : f.max_cones)
    for (const Cone& b : g.max_cones) {
      std::vector<int> c = a.rays;
      for (int r : b.rays) c.push_back(f.ray_count() + r);
      std::sort(c.begin(), c.end());
      cones.push_back(Cone{std::move(c)});
    }
  return assemble(n, std::move(rays), std::move(cones));
}

Fan proj_bundle_fan(const Fan& base, const std::vector<IntVec>& twists) {
  int n = static_cast<int>(twists.size());
  if (n < 1) fail("InvalidTwists", "a projective bundle needs at least one twist vector");
  for (const IntVec& t : twists)
    if (static_cast<int>(t.size()) != base.ray_count())
      fail("InvalidTwists", "twist vector length must equal the base ray count");

  int b = base.rank;
  int rank = b + n;
  std::vector<IntVec> rays;
  // v_1..v_n then v_0 = -(v_1+..+v_n) in the fiber block.
  for (int i = 0; i < n; ++i) {
    IntVec v(rank, Int(0));
    v[b + i] = 1;
    rays.push_back(std::move(v));
  }
  {
    IntVec v0(rank, Int(0));
    for (int i = 0; i < n; ++i) v0[b + i] = -1;
    rays.push_back(std::move(v0));
  }
  // Lift of base ray tau: (u_tau, a_tau,1 .. a_tau,n).
  for (int t = 0; t < base.ray_count(); ++t) {
    IntVec v(rank, Int(0));
    for (int i = 0; i < b; ++i) v[i] = base.rays[t][i];
    for (int j = 0; j < n; ++j) v[b + j] = twists[j][t];
    rays.push_back(std::move(v));
  }

  auto fiber_ray_index = [n](int j) { return j == 0 ? n : j - 1; };  // v_j's position
  std::vector<Cone> cones;
  for (const Cone& sigma : base.max_cones)
    for (int drop = 0; drop <= n; ++drop) {
      std::vector<int> c;
      for (int r : sigma.rays) c.push_back(n + 1 + r);
      for (int j = 0; j <= n; ++j)
        if (j != drop) c.push_back(fiber_ray_index(j));
      std::sort(c.begin(), c.end());
      cones.push_back(Cone{std::move(c)});
    }
  return assemble(rank, std::move(rays), std::move(cones));
}

bool same_fan(const Fan& a, const Fan& b) {
  if (a.rank != b.rank || a.rays != b.rays) return false;
  std::set<std::vector<int>> ca, cb;
  for (const Cone& c : a.max_cones) ca.insert(c.rays);
  for (const Cone& c : b.max_cones) cb.insert(c.rays);
  return ca == cb;
}

}  // namespace toric
