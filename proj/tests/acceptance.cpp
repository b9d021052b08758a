// Acceptance suite: one criterion per numbered check, one PASS/FAIL line
// each, exact rational comparisons throughout. Exit status is the number of
// failed criteria.

#include <functional>
#include <iostream>
#include <set>

#include "support.hpp"
#include "toric/error.hpp"

using namespace toric;
using namespace testsupport;

namespace {

int failures = 0;

void criterion(int number, const std::string& label, const std::function<void()>& body) {
  try {
    body();
    std::cout << "PASS  " << number << "  " << label << "\n";
  } catch (const std::exception& e) {
    ++failures;
    std::cout << "FAIL  " << number << "  " << label << "  [" << e.what() << "]\n";
  }
}

void expect(bool ok, const std::string& what) {
  if (!ok) throw std::runtime_error(what);
}

std::array<Rat, 3> line(long a, long b, long c) { return {Rat(a), Rat(b), Rat(c)}; }

PlanePair model_pair() {
  return make_plane_pair({line(1, 0, 0), line(0, 1, 0), line(1, 1, 0), line(1, 3, 0),
                          line(0, 0, 1), line(1, 2, 1)},
                         RatVec(6, make_rat(1, 2)));
}

std::vector<Fan> baseline_corpus(Rng& rng) {
  std::vector<Fan> corpus;
  for (int n = 1; n <= 5; ++n) corpus.push_back(projective_space_fan(n));
  corpus.push_back(product_fan(projective_space_fan(1), projective_space_fan(1)));
  corpus.push_back(product_fan(projective_space_fan(1), projective_space_fan(2)));
  corpus.push_back(product_fan(projective_space_fan(2), projective_space_fan(3)));
  corpus.push_back(
      product_fan(projective_space_fan(1),
                  product_fan(projective_space_fan(1), projective_space_fan(2))));
  for (int t = 0; t < 20; ++t)
    corpus.push_back(build_bott_tower(random_bott_spec(rng, 5)).fans.back());
  return corpus;
}

}  // namespace

int main() {
  criterion(1, "model arrangement: lambda1 = 1/2 and lambda2 = 0", [] {
    PlanePair pair = model_pair();
    LambdaReport lr = lambda_invariants(pair, make_triangle(pair, 3, 4, 5));
    expect(lr.lambda1 == make_rat(1, 2), "lambda1 != 1/2");
    expect(lr.lambda2 == Rat(0), "lambda2 != 0");
  });

  criterion(2, "model arrangement: lc, log CY, complexity zero", [] {
    ArrangementReport r = check_pair(model_pair());
    expect(r.lc, "not lc");
    expect(r.log_cy, "not log CY");
    expect(r.complexity == 0, "complexity != 0");
  });

  criterion(3, "decomposition reconstructs B; forced triangle is infeasible", [] {
    PlanePair pair = model_pair();
    auto decomposition = decompose(pair);
    Rat total(0);
    RatVec rebuilt(6, Rat(0));
    for (const WeightedTriangle& wt : decomposition) {
      expect(wt.weight > 0, "nonpositive weight");
      total += wt.weight;
      for (int li : wt.triangle.lines) rebuilt[li] += wt.weight;
    }
    expect(total == 1, "weights do not sum to 1");
    expect(rebuilt == pair.coeffs, "reconstruction mismatch");
    bool infeasible = false;
    try {
      decompose(pair, Triangle{{3, 4, 5}});
    } catch (const Error& e) {
      infeasible = (e.code() == "Infeasible");
    }
    expect(infeasible, "restricted system unexpectedly feasible");
  });

  criterion(4, "crepancy of complexity across 200 random star subdivisions", [] {
    Rng rng(2028);
    auto pool = base_fan_pool_rank23();
    for (int t = 0; t < 200; ++t) {
      Fan fan = random_complete_fan(rng, pool, 1);
      ToricPair pair = random_lc_pair(rng, fan);
      IntVec v = random_interior_point(rng, pair.fan);
      Rat a = log_discrepancy(pair, v);
      ToricPair pulled = pullback_star_subdivision(pair, v);
      expect(complexity(pulled) == complexity(pair) + a, "complexity identity violated");
    }
  });

  criterion(5, "full boundary: complexity 0 and index 1 across the corpus", [] {
    Rng rng(2005);
    for (const Fan& fan : baseline_corpus(rng)) {
      expect(fan.smooth && fan.complete, "corpus fan not smooth complete");
      ToricPair full = make_toric_pair(fan, RatVec(fan.ray_count(), Rat(1)));
      expect(complexity(full) == 0, "complexity != 0");
      expect(index(full) == Int(1), "index != 1");
    }
  });

  criterion(6, "index family: complexity 0 and index m over the (d,n,m) grid", [] {
    for (int d = 1; d <= 3; ++d)
      for (int n = 2; n <= 3; ++n)
        for (int m = 3; m <= 5; ++m) {
          IndexExample ex = build_index_example(d, n, m);
          PairReport r = pair_report(ex.pair);
          expect(r.complexity == 0, "complexity != 0");
          expect(r.index == Int(m), "index != m");
        }
  });

  criterion(7, "splitting fans: partition and cone decomposition, 50 random bundles", [] {
    Rng rng(2007);
    for (int t = 0; t < 50; ++t) {
      BundleSample b = random_bundle(rng);
      SplitResult s = split_fan(b.morphism);
      std::set<int> fiber(s.fiber_rays.begin(), s.fiber_rays.end());
      std::set<int> lifted(s.lift.begin(), s.lift.end());
      expect(static_cast<int>(lifted.size()) == b.base.ray_count(),
             "|lifted| != |target rays|");
      expect(fiber.size() + lifted.size() == static_cast<size_t>(b.total.ray_count()),
             "ray partition broken");
      std::set<std::vector<int>> fiber_cones, section_cones;
      for (const Cone& c : s.fiber_max_cones) fiber_cones.insert(c.rays);
      for (const Cone& c : s.section_cones) section_cones.insert(c.rays);
      for (const Cone& c : b.total.max_cones) {
        std::vector<int> kp, sp;
        for (int r : c.rays) (fiber.count(r) ? kp : sp).push_back(r);
        expect(fiber_cones.count(kp) == 1 && section_cones.count(sp) == 1,
               "maximal cone does not decompose");
      }
    }
  });

  criterion(8, "bundle extraction round trip on 50 random specs", [] {
    Rng rng(2008);
    for (int t = 0; t < 50; ++t) {
      BundleSample b = random_bundle(rng);
      BundleExtraction e = extract_line_bundles(b.morphism, split_fan(b.morphism));
      int n = static_cast<int>(b.twists.size());
      std::vector<IntVec> by_summand(n, IntVec(b.base.ray_count()));
      for (int tr = 0; tr < b.base.ray_count(); ++tr)
        for (int i = 0; i < n; ++i) by_summand[i][tr] = e.twists[tr][i];
      expect(by_summand == b.twists, "twist data not reproduced");
      Fan rebuilt = proj_bundle_fan(b.base, by_summand);
      expect(rebuilt.rays == b.total.rays && same_fan(rebuilt, b.total),
             "rebuilt fan differs from the source");
    }
  });

  criterion(9, "fiber weights (1,1), (1,1,1), (1,2,3), (1,1,2)", [] {
    auto weights_of = [](const FanMorphism& f) {
      FiberType ft = fiber_type(f, split_fan(f));
      expect(ft.weights.has_value(), "no weight vector");
      return *ft.weights;
    };
    {
      BundleSample b = make_bundle(projective_space_fan(1), {IntVec{Int(0), Int(2)}});
      expect(weights_of(b.morphism) == std::vector<Int>{Int(1), Int(1)}, "(1,1) failed");
    }
    {
      BundleSample b = make_bundle(projective_space_fan(1),
                                   {IntVec{Int(0), Int(0)}, IntVec{Int(0), Int(1)}});
      expect(weights_of(b.morphism) == std::vector<Int>{Int(1), Int(1), Int(1)},
             "(1,1,1) failed");
    }
    {
      Fan w123 = weighted_projective_fan({Int(1), Int(2), Int(3)});
      IntMat m(1, 3);
      m.at(0, 2) = 1;
      FanMorphism f = make_fan_morphism(product_fan(w123, projective_space_fan(1)),
                                        projective_space_fan(1), m);
      expect(weights_of(f) == std::vector<Int>{Int(1), Int(2), Int(3)}, "(1,2,3) failed");
    }
    {
      Fan w112 = weighted_projective_fan({Int(1), Int(1), Int(2)});
      IntMat m(1, 3);
      m.at(0, 2) = 1;
      FanMorphism f = make_fan_morphism(product_fan(w112, projective_space_fan(1)),
                                        projective_space_fan(1), m);
      expect(weights_of(f) == std::vector<Int>{Int(1), Int(1), Int(2)}, "(1,1,2) failed");
    }
  });

  criterion(10, "section counts: 3 on the plane, >= 2 on P(1,1,2), 1 on P(1,2,3)", [] {
    expect(divisor_sections(projective_space_fan(2), IntVec{Int(1), Int(0), Int(0)}) == 3,
           "h0(O(1)) != 3");
    Fan w112 = weighted_projective_fan({Int(1), Int(1), Int(2)});
    expect(divisor_sections(w112, IntVec{Int(0), Int(0), Int(1)}) >= 2,
           "weight-1 ray divisor has < 2 sections");
    Fan w123 = weighted_projective_fan({Int(1), Int(2), Int(3)});
    expect(divisor_sections(w123, IntVec{Int(0), Int(0), Int(1)}) == 1,
           "c0-ray divisor should only carry the zero character");
  });

  criterion(11, "canonical bundle formula pushforward", [] {
    Rng rng(2011);
    for (int t = 0; t < 25; ++t) {
      BundleSample b = random_bundle(rng);
      ToricPair full = make_toric_pair(b.total, RatVec(b.total.ray_count(), Rat(1)));
      expect(complexity(full) == 0, "source complexity != 0");
      ToricPair pushed = cbf_pushforward(full, b.morphism);
      expect(pushed.coeffs == RatVec(b.base.ray_count(), Rat(1)),
             "full boundary did not push to the full boundary");
      expect(complexity(pushed) == 0, "pushforward complexity != 0");
    }
    IntMat two(1, 1);
    two.at(0, 0) = 2;
    FanMorphism doubling =
        make_fan_morphism(projective_space_fan(1), projective_space_fan(1), two);
    ToricPair empty = make_toric_pair(projective_space_fan(1), RatVec(2, Rat(0)));
    expect(cbf_pushforward(empty, doubling).coeffs == RatVec{make_rat(1, 2), make_rat(1, 2)},
           "doubling example != (1/2, 1/2)");
  });

  criterion(12, "lambda2 closed form matches the sampling oracle, 100 arrangements", [] {
    Rng rng(2012);
    int done = 0;
    while (done < 100) {
      PlanePair pair = random_lc_arrangement(rng, 8);
      Triangle t = associated_triangles(pair)[0];
      LambdaReport lr = lambda_invariants(pair, t);
      if (lr.lambda1 == 1) {
        expect(lr.lambda2 == 1, "lambda1 = 1 must force lambda2 = 1");
        ++done;
        continue;
      }
      Lambda2Bracket bracket = lambda2_oracle(pair, t, lr.lambda1);
      expect(bracket.prefix_ok, "oracle feasibility is not an interval");
      if (bracket.all_feasible) {
        expect(lr.lambda2 == lr.lambda1, "oracle says lambda2 = lambda1");
      } else {
        expect(lr.lambda2 >= bracket.lo && lr.lambda2 < bracket.hi,
               "closed form outside the oracle bracket");
        expect(arrangement_lc(pair.lines, peel_coeffs(pair, t, lr.lambda2)),
               "closed-form lambda2 is not feasible");
        Rat above = (lr.lambda2 + bracket.hi) / 2;
        expect(!arrangement_lc(pair.lines, peel_coeffs(pair, t, above)),
               "a larger peel is still feasible");
      }
      ++done;
    }
  });

  criterion(13, "Bott recognition: 30 round trips; P(1,1,2) is not a tower", [] {
    Rng rng(2013);
    for (int t = 0; t < 30; ++t) {
      BottTowerSpec spec = random_bott_spec(rng, 5);
      TowerReport built = build_bott_tower(spec);
      auto recognized = recognize_bott_tower(built.fans.back());
      expect(recognized.has_value(), "tower not recognized");
      expect(recognized->stage_dims == built.stage_dims, "stage dims differ");
    }
    expect(!recognize_bott_tower(weighted_projective_fan({Int(1), Int(1), Int(2)})).has_value(),
           "singular fan recognized as a tower");
  });

  if (failures == 0) {
    std::cout << "All 13 acceptance criteria passed.\n";
  } else {
    std::cout << failures << " criterion(s) failed.\n";
  }
  return failures;
}
