#include "toric/fibration.hpp"

#include <algorithm>
#include <set>

#include "toric/error.hpp"

namespace toric {

namespace {

bool surjective_on_lattices(const IntMat& m) {
  if (m.rows > m.cols) return false;
  Snf s = smith_normal_form(m);
  for (int i = 0; i < m.rows; ++i)
    if (s.d.at(i, i) != 1) return false;
  return true;
}

// f(u) = k * u_target for some target ray and integer k > 0?
struct RayImage {
  bool in_kernel = false;
  int target_ray = -1;
  Int multiple;
};

RayImage classify_ray(const Fan& target, const IntVec& image) {
  RayImage r;
  if (is_zero(image)) {
    r.in_kernel = true;
    return r;
  }
  IntVec prim = primitive_vector(image);
  auto idx = target.ray_index(prim);
  if (idx) {
    r.target_ray = *idx;
    r.multiple = vec_gcd(image);
  }
  return r;
}

}  // namespace

FanMorphism make_fan_morphism(Fan source, Fan target, IntMat matrix) {
  if (matrix.rows != target.rank || matrix.cols != source.rank)
    fail("ValidationError", "morphism matrix must be target_rank x source_rank");
  for (size_t ci = 0; ci < source.max_cones.size(); ++ci) {
    const Cone& cone = source.max_cones[ci];
    bool contained = false;
    for (size_t ti = 0; ti < target.max_cones.size() && !contained; ++ti) {
      contained = true;
      for (int r : cone.rays) {
        if (!target.barycentric(static_cast<int>(ti), mat_apply(matrix, source.rays[r]))) {
          contained = false;
          break;
        }
      }
    }
    if (!contained)
      fail("ValidationError", "image of source cone " + std::to_string(ci) +
                                  " is contained in no target cone");
  }
  return FanMorphism{std::move(source), std::move(target), std::move(matrix)};
}

SplitResult split_fan(const FanMorphism& f) {
  if (!f.source.complete || !f.target.complete)
    fail("IncompleteFan", "split_fan needs complete source and target fans");
  if (!surjective_on_lattices(f.matrix))
    fail("NotSurjective", "the lattice map is not surjective");

  SplitResult out;
  out.lift.assign(f.target.ray_count(), -1);
  out.lift_multiple.assign(f.target.ray_count(), Int(0));
  int kernel_dim = f.source.rank - f.target.rank;

  for (int r = 0; r < f.source.ray_count(); ++r) {
    RayImage img = classify_ray(f.target, mat_apply(f.matrix, f.source.rays[r]));
    if (img.in_kernel) {
      out.fiber_rays.push_back(r);
    } else if (img.target_ray >= 0) {
      if (out.lift[img.target_ray] >= 0)
        fail("NonUniqueLift", "target ray " + std::to_string(img.target_ray) +
                                  " has more than one source ray over it");
      out.lift[img.target_ray] = r;
      out.lift_multiple[img.target_ray] = img.multiple;
    } else {
      fail("MissingLiftedCone", "source ray " + std::to_string(r) +
                                    " maps into the relative interior of a higher-dimensional "
                                    "cone; the morphism does not split");
    }
  }
  for (int t = 0; t < f.target.ray_count(); ++t)
    if (out.lift[t] < 0)
      fail("MissingLiftedCone", "no source ray lies over target ray " + std::to_string(t));

  std::set<int> lifted(out.lift.begin(), out.lift.end());
  auto is_subset_of_some_cone = [&](const std::vector<int>& rays) {
    for (const Cone& c : f.source.max_cones)
      if (std::includes(c.rays.begin(), c.rays.end(), rays.begin(), rays.end())) return true;
    return false;
  };

  for (const Cone& tc : f.target.max_cones) {
    std::vector<int> lift_cone;
    for (int t : tc.rays) lift_cone.push_back(out.lift[t]);
    std::sort(lift_cone.begin(), lift_cone.end());
    if (!is_subset_of_some_cone(lift_cone))
      fail("MissingLiftedCone", "the lift of a target cone is not a cone of the source fan");
    out.section_cones.push_back(Cone{std::move(lift_cone)});
  }

  // Every maximal source cone must decompose as a maximal kernel cone plus
  // the lift of a maximal target cone.
  std::set<std::vector<int>> fiber_cones;
  std::set<std::vector<int>> target_cone_sets;
  for (const Cone& c : f.target.max_cones) target_cone_sets.insert(c.rays);
  for (const Cone& c : f.source.max_cones) {
    std::vector<int> kernel_part, section_part;
    for (int r : c.rays)
      (lifted.count(r) ? section_part : kernel_part).push_back(r);
    std::vector<int> image;
    for (int r : section_part)
      for (int t = 0; t < f.target.ray_count(); ++t)
        if (out.lift[t] == r) image.push_back(t);
    std::sort(image.begin(), image.end());
    if (static_cast<int>(kernel_part.size()) != kernel_dim || !target_cone_sets.count(image))
      fail("MissingLiftedCone",
           "a maximal source cone does not decompose into fiber and section parts");
    fiber_cones.insert(kernel_part);
  }
  for (const auto& c : fiber_cones) out.fiber_max_cones.push_back(Cone{c});
  return out;
}

Tri is_locally_trivial(const FanMorphism& f, const SplitResult& split) {
  for (const Int& k : split.lift_multiple)
    if (k != 1) return Tri::False;  // saturation fails on that ray's cone
  if (!f.target.smooth) return Tri::Unknown;
  return Tri::True;
}

FiberType fiber_type(const FanMorphism& f, const SplitResult& split) {
  std::vector<IntVec> basis = kernel_lattice_basis(f.matrix);
  int d = static_cast<int>(basis.size());
  if (d == 0) fail("ValidationError", "the morphism has no positive-dimensional fiber");
  IntMat basis_mat = mat_from_columns(basis);

  std::vector<IntVec> fiber_rays_local;
  for (int r : split.fiber_rays) {
    IntVec b(f.source.rank);
    for (int i = 0; i < f.source.rank; ++i) b[i] = f.source.rays[r][i];
    auto sol = solve_rational(basis_mat, RatVec(b.begin(), b.end()));
    if (!sol) fail("Internal", "fiber ray outside the kernel lattice");
    IntVec coords(d);
    for (int i = 0; i < d; ++i) {
      if (!is_integer((*sol)[i])) fail("Internal", "fiber ray not integral in the kernel basis");
      coords[i] = numer((*sol)[i]);
    }
    fiber_rays_local.push_back(std::move(coords));
  }

  std::vector<std::vector<int>> fiber_cones;
  for (const Cone& c : split.fiber_max_cones) {
    std::vector<int> local;
    for (int r : c.rays) {
      auto pos = std::find(split.fiber_rays.begin(), split.fiber_rays.end(), r);
      local.push_back(static_cast<int>(pos - split.fiber_rays.begin()));
    }
    fiber_cones.push_back(std::move(local));
  }

  FiberType out{validate_fan(d, fiber_rays_local, fiber_cones), std::nullopt};

  if (out.fan.ray_count() == d + 1) {
    // The rays of a complete simplicial fan with rank+1 rays satisfy one
    // relation up to scale; a positive primitive representative gives the
    // weights.
    IntMat m = mat_from_columns(out.fan.rays);
    std::vector<IntVec> rel = kernel_lattice_basis(m);
    if (rel.size() == 1) {
      IntVec w = rel[0];
      bool neg = false, mixed = false;
      for (const Int& x : w) {
        if (x < 0) neg = true;
        if (x == 0) mixed = true;
      }
      if (neg)
        for (Int& x : w) x = -x;
      for (const Int& x : w)
        if (x <= 0) mixed = true;
      if (!mixed) {
        std::sort(w.begin(), w.end());
        out.weights = std::move(w);
      }
    }
  }
  return out;
}

BundleExtraction extract_line_bundles(const FanMorphism& f, const SplitResult& split) {
  if (is_locally_trivial(f, split) != Tri::True)
    fail("NotLocallyTrivial", "extract_line_bundles needs a certified locally trivial bundle");
  int d = f.source.rank - f.target.rank;
  if (static_cast<int>(split.fiber_rays.size()) != d + 1)
    fail("FiberNotProjectiveSpace", "fiber fan does not have rank+1 rays");

  std::vector<IntVec> fiber_vecs;
  for (int r : split.fiber_rays) fiber_vecs.push_back(f.source.rays[r]);
  IntVec sum(f.source.rank, Int(0));
  for (const IntVec& v : fiber_vecs)
    for (int i = 0; i < f.source.rank; ++i) sum[i] += v[i];
  if (!is_zero(sum))
    fail("FiberNotProjectiveSpace", "fiber rays do not satisfy the all-ones relation");

  std::sort(fiber_vecs.begin(), fiber_vecs.end(),
            [](const IntVec& a, const IntVec& b) { return b < a; });  // descending
  fiber_vecs.pop_back();  // drop the lexicographically smallest fiber ray

  BundleExtraction out;
  out.fiber_basis = fiber_vecs;
  IntMat basis_mat = mat_from_columns(fiber_vecs);
  {
    // The remaining rays must form a lattice basis of ker ∩ N.
    Snf s = smith_normal_form(basis_mat);
    for (int i = 0; i < d; ++i)
      if (s.d.at(i, i) != 1)
        fail("FiberNotProjectiveSpace", "fiber rays do not span the kernel lattice");
  }

  auto section = integer_right_inverse(f.matrix);
  if (!section) fail("NotSurjective", "the lattice map admits no integer section");
  out.section = *section;

  for (int t = 0; t < f.target.ray_count(); ++t) {
    const IntVec& w = f.source.rays[split.lift[t]];
    IntVec residue = w;
    IntVec swf = mat_apply(out.section, mat_apply(f.matrix, w));
    for (int i = 0; i < f.source.rank; ++i) residue[i] -= swf[i];
    auto sol = solve_rational(basis_mat, RatVec(residue.begin(), residue.end()));
    if (!sol) fail("Internal", "lift residue is outside the fiber lattice");
    IntVec a(d);
    for (int i = 0; i < d; ++i) {
      if (!is_integer((*sol)[i])) fail("Internal", "non-integral twist coefficient");
      a[i] = numer((*sol)[i]);
    }
    out.twists.push_back(std::move(a));
  }

  out.line_bundle_classes.assign(d + 1, IntVec(f.target.ray_count(), Int(0)));
  for (int i = 1; i <= d; ++i)
    for (int t = 0; t < f.target.ray_count(); ++t)
      out.line_bundle_classes[i][t] = -out.twists[t][i - 1];
  return out;
}

std::vector<IntVec> normalized_twists(const BundleExtraction& e) {
  std::vector<IntVec> out = e.twists;
  if (out.empty()) return out;
  int d = static_cast<int>(out[0].size());
  for (int i = 0; i < d; ++i) {
    Int m = out[0][i];
    for (const IntVec& row : out) m = std::min(m, row[i]);
    for (IntVec& row : out) row[i] -= m;
  }
  return out;
}

ToricPair cbf_pushforward(const ToricPair& pair, const FanMorphism& f) {
  if (!same_fan(pair.fan, f.source))
    fail("ValidationError", "the pair does not live on the morphism's source fan");
  if (!is_lc(pair)) fail("NotLC", "cbf_pushforward needs a log canonical pair");

  RatVec coeffs(f.target.ray_count());
  for (int t = 0; t < f.target.ray_count(); ++t) {
    std::optional<Rat> lct;
    for (int r = 0; r < f.source.ray_count(); ++r) {
      RayImage img = classify_ray(f.target, mat_apply(f.matrix, f.source.rays[r]));
      if (img.target_ray != t) continue;
      Rat candidate = (Rat(1) - pair.coeffs[r]) / Rat(img.multiple);
      if (!lct || candidate < *lct) lct = candidate;
    }
    if (!lct)
      fail("NoRayOver", "no source ray lies over target ray " + std::to_string(t));
    coeffs[t] = Rat(1) - *lct;
  }
  return make_toric_pair(f.target, std::move(coeffs));
}

}  // namespace toric
