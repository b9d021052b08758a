#pragma once

// Shared generators and independent oracles for the test suites. Everything
// is seeded deterministically; exact arithmetic keeps the runs reproducible.

#include <algorithm>
#include <random>
#include <vector>

#include "toric/arrangement.hpp"
#include "toric/bott.hpp"
#include "toric/error.hpp"
#include "toric/fibration.hpp"

namespace testsupport {

using namespace toric;
using Rng = std::mt19937_64;

inline int rand_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Random rational in [0,1] with denominator <= max_den.
inline Rat rand_rat01(Rng& rng, int max_den = 6) {
  int q = rand_int(rng, 1, max_den);
  int p = rand_int(rng, 0, q);
  return make_rat(p, q);
}

inline std::vector<Fan> base_fan_pool_rank23() {
  std::vector<Fan> pool;
  pool.push_back(projective_space_fan(2));
  pool.push_back(product_fan(projective_space_fan(1), projective_space_fan(1)));
  pool.push_back(weighted_projective_fan({Int(1), Int(1), Int(2)}));
  pool.push_back(weighted_projective_fan({Int(1), Int(2), Int(3)}));
  pool.push_back(projective_space_fan(3));
  pool.push_back(product_fan(projective_space_fan(1), projective_space_fan(2)));
  return pool;
}

// Primitive point strictly inside some maximal cone (or on an inner face),
// distinct from every ray.
inline IntVec random_interior_point(Rng& rng, const Fan& fan) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    const Cone& c = fan.max_cones[rand_int(rng, 0, static_cast<int>(fan.max_cones.size()) - 1)];
    IntVec v(fan.rank, Int(0));
    for (int r : c.rays) {
      int lambda = rand_int(rng, 0, 3);
      for (int i = 0; i < fan.rank; ++i) v[i] += Int(lambda) * fan.rays[r][i];
    }
    if (is_zero(v)) continue;
    v = primitive_vector(v);
    if (!fan.ray_index(v)) return v;
  }
  // Dense fans can exhaust the cheap attempts; fall back to a cone barycenter.
  for (const Cone& c : fan.max_cones) {
    IntVec v(fan.rank, Int(0));
    for (int r : c.rays)
      for (int i = 0; i < fan.rank; ++i) v[i] += fan.rays[r][i];
    v = primitive_vector(v);
    if (!fan.ray_index(v)) return v;
  }
  throw std::runtime_error("no subdivision point found");
}

inline Fan random_complete_fan(Rng& rng, const std::vector<Fan>& pool, int max_subdivisions = 2) {
  Fan fan = pool[rand_int(rng, 0, static_cast<int>(pool.size()) - 1)];
  int n = rand_int(rng, 0, max_subdivisions);
  for (int i = 0; i < n; ++i) fan = star_subdivision(fan, random_interior_point(rng, fan)).first;
  return fan;
}

inline ToricPair random_lc_pair(Rng& rng, Fan fan) {
  RatVec coeffs;
  for (int i = 0; i < fan.ray_count(); ++i) coeffs.push_back(rand_rat01(rng));
  return make_toric_pair(std::move(fan), std::move(coeffs));
}

// ---- bundles ----

struct BundleSample {
  Fan base;
  std::vector<IntVec> twists;  // [summand][base ray]
  Fan total;
  FanMorphism morphism;
};

inline BundleSample make_bundle(const Fan& base, const std::vector<IntVec>& twists) {
  Fan total = proj_bundle_fan(base, twists);
  IntMat proj(base.rank, total.rank);
  for (int i = 0; i < base.rank; ++i) proj.at(i, i) = 1;
  FanMorphism f = make_fan_morphism(total, base, proj);
  return BundleSample{base, twists, std::move(total), std::move(f)};
}

inline BundleSample random_bundle(Rng& rng, int max_total_rank = 5) {
  std::vector<Fan> bases;
  bases.push_back(projective_space_fan(1));
  bases.push_back(projective_space_fan(2));
  bases.push_back(product_fan(projective_space_fan(1), projective_space_fan(1)));
  const Fan& base = bases[rand_int(rng, 0, 2)];
  int n = rand_int(rng, 1, std::max(1, max_total_rank - base.rank));
  std::vector<IntVec> twists;
  for (int j = 0; j < n; ++j) {
    IntVec t(base.ray_count());
    for (int k = 0; k < base.ray_count(); ++k) t[k] = rand_int(rng, -3, 3);
    twists.push_back(std::move(t));
  }
  return make_bundle(base, twists);
}

inline BottTowerSpec random_bott_spec(Rng& rng, int max_total_rank = 5) {
  BottTowerSpec spec;
  int total = 0;
  int first = rand_int(rng, 1, 3);
  spec.stages.push_back(BottStage{first, {}});
  total += first;
  int rays = first + 1;
  while (total < max_total_rank && rand_int(rng, 0, 2) != 0) {
    int dim = rand_int(rng, 1, std::min(3, max_total_rank - total));
    BottStage stage;
    stage.dim = dim;
    for (int j = 0; j < dim; ++j) {
      IntVec t(rays);
      for (int k = 0; k < rays; ++k) t[k] = rand_int(rng, -3, 3);
      stage.twists.push_back(std::move(t));
    }
    spec.stages.push_back(std::move(stage));
    total += dim;
    rays += dim + 1;
  }
  return spec;
}

// ---- arrangements ----

inline std::array<Rat, 3> rand_line(Rng& rng) {
  for (;;) {
    std::array<Rat, 3> l{Rat(rand_int(rng, -3, 3)), Rat(rand_int(rng, -3, 3)),
                         Rat(rand_int(rng, -3, 3))};
    if (l[0] != 0 || l[1] != 0 || l[2] != 0) return l;
  }
}

// Random lc arrangement pair with at least one associated triangle; retries
// deterministically until one comes out.
inline PlanePair random_lc_arrangement(Rng& rng, int max_lines = 8) {
  for (;;) {
    int n = rand_int(rng, 3, max_lines);
    std::vector<std::array<Rat, 3>> lines;
    for (int i = 0; i < n && static_cast<int>(lines.size()) < n; ++i) lines.push_back(rand_line(rng));
    RatVec coeffs;
    for (int i = 0; i < n; ++i) {
      int q = rand_int(rng, 1, 4);
      coeffs.push_back(make_rat(rand_int(rng, 1, q), q));
    }
    try {
      PlanePair pair = make_plane_pair(lines, coeffs);
      if (!check_pair(pair).lc) continue;
      if (associated_triangles(pair).empty()) continue;
      return pair;
    } catch (const Error&) {
      continue;
    }
  }
}

// Peeled coefficient vector of (B - t*T)/(1 - t) over the same lines.
inline RatVec peel_coeffs(const PlanePair& pair, const Triangle& tri, const Rat& t) {
  RatVec out = pair.coeffs;
  for (int li : tri.lines) out[li] -= t;
  for (Rat& c : out) c /= (Rat(1) - t);
  return out;
}

// Independent lambda2 oracle: scan t = k/200 with the raw multiplicity-based
// lc check, confirm the feasible set is a prefix, then bisect the boundary
// cell. Returns the bracket [lo, hi) with lo feasible and hi infeasible
// (hi = lambda1 + epsilon sentinel when everything is feasible).
struct Lambda2Bracket {
  Rat lo, hi;
  bool prefix_ok = false;
  bool all_feasible = false;  // feasible through lambda1 itself
};

inline Lambda2Bracket lambda2_oracle(const PlanePair& pair, const Triangle& tri,
                                     const Rat& lambda1) {
  auto feas = [&](const Rat& t) { return arrangement_lc(pair.lines, peel_coeffs(pair, tri, t)); };
  Lambda2Bracket out;
  out.prefix_ok = true;

  bool seen_infeasible = false;
  Rat lo(0), hi = lambda1;
  for (int k = 0;; ++k) {
    Rat t = make_rat(k, 200);
    if (t > lambda1) break;
    if (feas(t)) {
      if (seen_infeasible) out.prefix_ok = false;  // the feasible set must be an interval
      lo = t;
    } else if (!seen_infeasible) {
      seen_infeasible = true;
      hi = t;
    }
  }

  if (feas(lambda1)) {
    // The feasible set is contained in [0, lambda1], so the maximum is
    // attained at lambda1 itself.
    out.all_feasible = true;
    out.prefix_ok = out.prefix_ok && !seen_infeasible;
    out.lo = lambda1;
    out.hi = lambda1;
    return out;
  }

  for (int i = 0; i < 40; ++i) {
    Rat mid = (lo + hi) / 2;
    (feas(mid) ? lo : hi) = mid;
  }
  out.lo = lo;
  out.hi = hi;
  return out;
}

}  // namespace testsupport
