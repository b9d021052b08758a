#include "toric/bott.hpp"

#include <algorithm>
#include <set>

#include "toric/error.hpp"

namespace toric {

namespace {

IntMat base_projection(int base_rank, int total_rank) {
  IntMat m(base_rank, total_rank);
  for (int i = 0; i < base_rank; ++i) m.at(i, i) = 1;
  return m;
}

bool fiber_is_projective_space(const FanMorphism& f, const SplitResult& split) {
  FiberType ft = fiber_type(f, split);
  if (!ft.weights) return false;
  for (const Int& w : *ft.weights)
    if (w != 1) return false;
  return true;
}

void verify_level(const FanMorphism& f) {
  SplitResult split = split_fan(f);
  if (is_locally_trivial(f, split) != Tri::True)
    fail("NotLocallyTrivial", "tower level is not a certified locally trivial bundle");
  if (!fiber_is_projective_space(f, split))
    fail("FiberNotProjectiveSpace", "tower level fiber is not a projective space");
}

}  // namespace

TowerReport build_bott_tower(const BottTowerSpec& spec) {
  if (spec.stages.empty()) fail("ValidationError", "tower needs at least one stage");
  if (!spec.stages[0].twists.empty())
    fail("ValidationError", "stage 1 sits over a point and takes no twists");
  for (const BottStage& s : spec.stages)
    if (s.dim < 1) fail("ValidationError", "stage dimensions must be positive");

  TowerReport report;
  report.stage_dims.push_back(spec.stages[0].dim);
  report.fans.push_back(projective_space_fan(spec.stages[0].dim));

  for (size_t i = 1; i < spec.stages.size(); ++i) {
    const BottStage& s = spec.stages[i];
    const Fan& base = report.fans.back();
    if (static_cast<int>(s.twists.size()) != s.dim)
      fail("InvalidTwists", "stage " + std::to_string(i + 1) + " needs dim-many twist vectors");
    Fan total = proj_bundle_fan(base, s.twists);
    FanMorphism f =
        make_fan_morphism(total, base, base_projection(base.rank, total.rank));
    verify_level(f);
    report.stage_dims.push_back(s.dim);
    report.fans.push_back(std::move(total));
    report.morphisms.push_back(std::move(f));
  }
  return report;
}

namespace {

// Candidate fiber subsets in lexicographic index order, shorter prefixes
// first: (0), (0,1), (0,1,2), ..., (0,2), ... First full tower found wins.
struct Recognizer {
  const Fan& fan;
  std::optional<TowerReport> result;

  bool try_subset(const std::vector<int>& subset) {
    int d = static_cast<int>(subset.size()) - 1;
    if (d < 1 || d >= fan.rank) return false;

    IntVec sum(fan.rank, Int(0));
    for (int r : subset)
      for (int i = 0; i < fan.rank; ++i) sum[i] += fan.rays[r][i];
    if (!is_zero(sum)) return false;

    std::vector<IntVec> scols;
    for (int r : subset) scols.push_back(fan.rays[r]);
    IntMat m = mat_from_columns(scols);
    if (rank(m) != d) return false;

    // Every d-subset of S must be a cone of the fan.
    for (int drop : subset) {
      std::vector<int> face;
      for (int r : subset)
        if (r != drop) face.push_back(r);
      bool found = false;
      for (const Cone& c : fan.max_cones)
        if (std::includes(c.rays.begin(), c.rays.end(), face.begin(), face.end())) {
          found = true;
          break;
        }
      if (!found) return false;
    }

    // Quotient by the saturated span of S: the last rank-d rows of the SNF
    // left transform kill exactly that sublattice.
    Snf s = smith_normal_form(m);
    IntMat q(fan.rank - d, fan.rank);
    for (int i = 0; i < fan.rank - d; ++i)
      for (int j = 0; j < fan.rank; ++j) q.at(i, j) = s.u.at(d + i, j);

    std::set<int> in_subset(subset.begin(), subset.end());
    std::vector<int> target_of(fan.ray_count(), -1);
    std::vector<IntVec> target_rays;
    for (int r = 0; r < fan.ray_count(); ++r) {
      if (in_subset.count(r)) continue;
      IntVec img = mat_apply(q, fan.rays[r]);
      if (is_zero(img) || !is_primitive(img)) return false;
      for (const IntVec& prev : target_rays)
        if (prev == img) return false;
      target_of[r] = static_cast<int>(target_rays.size());
      target_rays.push_back(std::move(img));
    }

    std::set<std::vector<int>> target_cones;
    for (const Cone& c : fan.max_cones) {
      std::vector<int> image;
      int fiber_part = 0;
      for (int r : c.rays) {
        if (in_subset.count(r))
          ++fiber_part;
        else
          image.push_back(target_of[r]);
      }
      if (fiber_part != d) return false;
      std::sort(image.begin(), image.end());
      target_cones.insert(std::move(image));
    }

    try {
      Fan base = validate_fan(fan.rank - d, target_rays,
                              std::vector<std::vector<int>>(target_cones.begin(), target_cones.end()));
      if (!base.complete || !base.smooth) return false;
      FanMorphism f = make_fan_morphism(fan, base, q);
      SplitResult split = split_fan(f);
      if (is_locally_trivial(f, split) != Tri::True) return false;
      if (!fiber_is_projective_space(f, split)) return false;
      auto below = recognize_bott_tower(base);
      if (!below) return false;
      below->stage_dims.push_back(d);
      below->fans.push_back(fan);
      below->morphisms.push_back(std::move(f));
      result = std::move(below);
      return true;
    } catch (const Error&) {
      return false;
    }
  }

  bool search(std::vector<int>& prefix, int next) {
    for (int r = next; r < fan.ray_count(); ++r) {
      prefix.push_back(r);
      if (prefix.size() >= 2 && try_subset(prefix)) return true;
      if (search(prefix, r + 1)) return true;
      prefix.pop_back();
    }
    return false;
  }
};

}  // namespace

std::optional<TowerReport> recognize_bott_tower(const Fan& fan) {
  if (!fan.complete || !fan.smooth) return std::nullopt;

  if (fan.ray_count() == fan.rank + 1) {
    IntVec sum(fan.rank, Int(0));
    for (const IntVec& r : fan.rays)
      for (int i = 0; i < fan.rank; ++i) sum[i] += r[i];
    if (!is_zero(sum)) return std::nullopt;
    TowerReport report;
    report.stage_dims.push_back(fan.rank);
    report.fans.push_back(fan);
    return report;
  }

  Recognizer rec{fan, std::nullopt};
  std::vector<int> prefix;
  if (rec.search(prefix, 0)) return std::move(rec.result);
  return std::nullopt;
}

IndexExample build_index_example(int d, int n, int m) {
  if (d < 1) fail("InvalidParameters", "d must be at least 1");
  if (n < 2) fail("InvalidParameters", "n must be at least 2");
  if (m < 3) fail("InvalidParameters", "m must be at least 3");

  Fan base = projective_space_fan(n - 1);
  IntVec twist(base.ray_count(), Int(0));
  twist[0] = d;
  Fan total = proj_bundle_fan(base, {twist});

  // Ray order of proj_bundle: v_1 (index 0), v_0 (index 1), then the lifts;
  // index 2 is the lift of the first base ray. The principal relation
  // D_{v_1} + d D_{lift} - D_{v_0} ~ 0 identifies D_{v_0} as the positive
  // section T with T ~ S + d * (hyperplane pullback), S = D_{v_1}.
  int rc = total.ray_count();
  IntVec class_s(rc, Int(0)), class_t(rc, Int(0)), class_h(rc, Int(0));
  class_s[0] = 1;
  class_t[1] = 1;
  class_h[2] = 1;

  RatVec lhs(class_t.begin(), class_t.end());
  RatVec rhs(rc);
  for (int i = 0; i < rc; ++i) rhs[i] = Rat(class_s[i]) + Rat(d) * Rat(class_h[i]);
  if (!classes_equal(total, lhs, rhs, ClassMode::Integral))
    fail("Internal", "section classes violate T ~ S + d*H");

  std::vector<NumericalComponent> components;
  components.push_back(NumericalComponent{class_s, Rat(1), Int(1)});
  components.push_back(NumericalComponent{class_t, make_rat(1, m), Int(m)});
  components.push_back(NumericalComponent{class_h, make_rat(1, m), Int(m) * Int(n)});

  NumericalPair pair = make_numerical_pair(total, std::move(components));
  return IndexExample{std::move(total), std::move(pair)};
}

}  // namespace toric
