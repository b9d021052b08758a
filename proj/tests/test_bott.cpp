#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "support.hpp"
#include "toric/error.hpp"

using namespace toric;
using namespace testsupport;

namespace {

IntVec vec(std::vector<long> xs) { return IntVec(xs.begin(), xs.end()); }

// Equality up to a relabelling of the rays (the ray lists may be ordered
// differently, the geometry must match).
bool fans_match_up_to_ray_order(const Fan& a, const Fan& b) {
  if (a.rank != b.rank || a.ray_count() != b.ray_count()) return false;
  std::map<IntVec, int> index_b;
  for (int i = 0; i < b.ray_count(); ++i) index_b[b.rays[i]] = i;
  std::vector<int> remap(a.ray_count());
  for (int i = 0; i < a.ray_count(); ++i) {
    auto it = index_b.find(a.rays[i]);
    if (it == index_b.end()) return false;
    remap[i] = it->second;
  }
  std::set<std::vector<int>> ca, cb;
  for (const Cone& c : a.max_cones) {
    std::vector<int> m;
    for (int r : c.rays) m.push_back(remap[r]);
    std::sort(m.begin(), m.end());
    ca.insert(std::move(m));
  }
  for (const Cone& c : b.max_cones) cb.insert(c.rays);
  return ca == cb;
}

}  // namespace

TEST_CASE("build: product of two lines") {
  BottTowerSpec spec{{BottStage{1, {}}, BottStage{1, {vec({0, 0})}}}};
  TowerReport report = build_bott_tower(spec);
  CHECK(report.stage_dims == std::vector<int>{1, 1});
  CHECK(fans_match_up_to_ray_order(
      report.fans.back(), product_fan(projective_space_fan(1), projective_space_fan(1))));
}

TEST_CASE("build: plane as a one-stage tower") {
  TowerReport report = build_bott_tower(BottTowerSpec{{BottStage{2, {}}}});
  CHECK(report.stage_dims == std::vector<int>{2});
  CHECK(same_fan(report.fans.back(), projective_space_fan(2)));
}

TEST_CASE("build: twisted line bundle stage recovers its twist") {
  long d = 3;
  BottTowerSpec spec{{BottStage{1, {}}, BottStage{1, {vec({d, 0})}}}};
  TowerReport report = build_bott_tower(spec);
  CHECK(report.fans.back().ray_count() == 4);
  CHECK(report.fans.back().smooth);
  REQUIRE(report.morphisms.size() == 1);
  const FanMorphism& f = report.morphisms[0];
  BundleExtraction e = extract_line_bundles(f, split_fan(f));
  CHECK(e.twists == std::vector<IntVec>{vec({d}), vec({0})});
}

TEST_CASE("build: validation") {
  CHECK_THROWS_WITH_AS(build_bott_tower(BottTowerSpec{}), doctest::Contains("ValidationError"),
                       Error);
  CHECK_THROWS_WITH_AS(
      build_bott_tower(BottTowerSpec{{BottStage{1, {vec({0, 0})}}}}),
      doctest::Contains("ValidationError"), Error);
  CHECK_THROWS_WITH_AS(
      build_bott_tower(BottTowerSpec{{BottStage{1, {}}, BottStage{2, {vec({0, 0})}}}}),
      doctest::Contains("InvalidTwists"), Error);
}

TEST_CASE("recognize: projective spaces and Hirzebruch-type fans") {
  auto p2 = recognize_bott_tower(projective_space_fan(2));
  REQUIRE(p2.has_value());
  CHECK(p2->stage_dims == std::vector<int>{2});

  for (long d : {0L, 1L, 2L, 3L}) {
    Fan fan = validate_fan(2, {vec({1, 0}), vec({-1, d}), vec({0, 1}), vec({0, -1})},
                           {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
    auto tower = recognize_bott_tower(fan);
    REQUIRE(tower.has_value());
    CHECK(tower->stage_dims == std::vector<int>{1, 1});
    // Deterministic search: for d != 0 the first zero-sum subset is the
    // fiber {(0,1),(0,-1)} = rays {2,3}; for d = 0 the product symmetry
    // makes {0,1} the first hit.
    REQUIRE(tower->morphisms.size() == 1);
    SplitResult s = split_fan(tower->morphisms[0]);
    CHECK(s.fiber_rays == (d == 0 ? std::vector<int>{0, 1} : std::vector<int>{2, 3}));
  }
}

TEST_CASE("recognize: smoothness gate") {
  CHECK_FALSE(recognize_bott_tower(weighted_projective_fan({Int(1), Int(1), Int(2)})).has_value());
}

TEST_CASE("recognize: rejects a smooth non-tower surface") {
  // The plane blown up in one point is a Hirzebruch-type surface and is a
  // tower; blowing up once more leaves 5 rays and no tower structure (a
  // tower surface has exactly 4).
  auto [once, i1] = star_subdivision(projective_space_fan(2), vec({1, 1}));
  auto tower1 = recognize_bott_tower(once);
  REQUIRE(tower1.has_value());
  CHECK(tower1->stage_dims == std::vector<int>{1, 1});
  auto [twice, i2] = star_subdivision(once, vec({2, 1}));
  CHECK(twice.smooth);
  CHECK_FALSE(recognize_bott_tower(twice).has_value());
  (void)i1;
  (void)i2;
}

TEST_CASE("round trip: recognize after build matches stage dims") {
  Rng rng(601);
  for (int t = 0; t < 12; ++t) {
    BottTowerSpec spec = random_bott_spec(rng, 5);
    TowerReport built = build_bott_tower(spec);
    CHECK(built.fans.back().smooth);
    CHECK(built.fans.back().complete);
    auto recognized = recognize_bott_tower(built.fans.back());
    REQUIRE(recognized.has_value());
    CHECK(recognized->stage_dims == built.stage_dims);
  }
}

TEST_CASE("tower fans carry toric log Calabi-Yau boundaries") {
  Rng rng(611);
  for (int t = 0; t < 8; ++t) {
    TowerReport built = build_bott_tower(random_bott_spec(rng, 5));
    const Fan& top = built.fans.back();
    int expected_rays = 0;
    for (int d : built.stage_dims) expected_rays += d + 1;
    CHECK(top.ray_count() == expected_rays);
    for (const Fan& fan : built.fans) {
      CHECK(fan.smooth);
      CHECK(fan.complete);
      ToricPair full = make_toric_pair(fan, RatVec(fan.ray_count(), Rat(1)));
      CHECK(complexity(full) == 0);
      CHECK(index(full) == Int(1));
    }
  }
}

TEST_CASE("full boundary pushes down the whole tower chain") {
  Rng rng(613);
  for (int t = 0; t < 6; ++t) {
    TowerReport built = build_bott_tower(random_bott_spec(rng, 5));
    if (built.morphisms.empty()) continue;
    ToricPair pair = make_toric_pair(built.fans.back(),
                                     RatVec(built.fans.back().ray_count(), Rat(1)));
    for (auto it = built.morphisms.rbegin(); it != built.morphisms.rend(); ++it) {
      pair = cbf_pushforward(pair, *it);
      CHECK(complexity(pair) == 0);
      CHECK(pair.coeffs == RatVec(pair.fan.ray_count(), Rat(1)));
    }
  }
}

TEST_CASE("index example: the (d, n, m) family") {
  IndexExample ex = build_index_example(1, 2, 3);
  PairReport r = pair_report(ex.pair);
  CHECK(r.complexity == 0);
  CHECK(r.index == Int(3));
  CHECK(r.lc == Tri::Unknown);
  CHECK(r.log_cy);

  IndexExample ex2 = build_index_example(2, 3, 4);
  PairReport r2 = pair_report(ex2.pair);
  CHECK(r2.complexity == 0);
  CHECK(r2.index == Int(4));

  CHECK_THROWS_WITH_AS(build_index_example(1, 2, 1), doctest::Contains("InvalidParameters"),
                       Error);
  CHECK_THROWS_WITH_AS(build_index_example(0, 2, 3), doctest::Contains("InvalidParameters"),
                       Error);
  CHECK_THROWS_WITH_AS(build_index_example(1, 1, 3), doctest::Contains("InvalidParameters"),
                       Error);
}

TEST_CASE("index example: complexity vanishes identically over a grid") {
  for (int d = 1; d <= 3; ++d)
    for (int n = 2; n <= 3; ++n)
      for (int m = 3; m <= 5; ++m) {
        IndexExample ex = build_index_example(d, n, m);
        // |B| = 1 + m(1/m) + mn(1/m) = n + 2 = ray count.
        CHECK(ex.fan.ray_count() == n + 2);
        CHECK(complexity(ex.pair) == 0);
        CHECK(index(ex.pair) == Int(m));
      }
}
