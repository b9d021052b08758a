#include "toric/arrangement.hpp"

#include <algorithm>
#include <map>

#include "toric/error.hpp"
#include "toric/simplex.hpp"

namespace toric {

namespace {

using Proj = std::array<Rat, 3>;

Proj normalize(const Proj& p) {
  for (int i = 0; i < 3; ++i)
    if (p[i] != 0) {
      Proj q;
      for (int j = 0; j < 3; ++j) q[j] = p[j] / p[i];
      return q;
    }
  fail("ValidationError", "zero projective triple");
}

Proj cross(const Proj& a, const Proj& b) {
  return Proj{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Rat dot(const Proj& a, const Proj& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

std::vector<IncidencePoint> incidence_of(const std::vector<Proj>& lines) {
  std::map<Proj, std::vector<int>> points;
  int n = static_cast<int>(lines.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Proj p = cross(lines[i], lines[j]);
      points.try_emplace(normalize(p));
    }
  for (auto& [p, incident] : points)
    for (int i = 0; i < n; ++i)
      if (dot(lines[i], p) == 0) incident.push_back(i);
  std::vector<IncidencePoint> out;
  out.reserve(points.size());
  for (auto& [p, incident] : points) out.push_back(IncidencePoint{p, std::move(incident)});
  return out;
}

bool concurrent(const PlanePair& pair, int a, int b, int c) {
  const Proj& la = pair.lines[a];
  const Proj& lb = pair.lines[b];
  const Proj& lc = pair.lines[c];
  Rat d = la[0] * (lb[1] * lc[2] - lb[2] * lc[1]) - la[1] * (lb[0] * lc[2] - lb[2] * lc[0]) +
          la[2] * (lb[0] * lc[1] - lb[1] * lc[0]);
  return d == 0;
}

void check_associated(const PlanePair& pair, const Triangle& t) {
  for (int li : t.lines)
    if (pair.coeffs[li] <= 0)
      fail("NotAssociated", "triangle line " + std::to_string(li) + " has coefficient zero");
  for (size_t i = 0; i < pair.lines.size(); ++i) {
    if (pair.coeffs[i] != 1) continue;
    if (std::find(t.lines.begin(), t.lines.end(), static_cast<int>(i)) == t.lines.end())
      fail("NotAssociated",
           "coefficient-one line " + std::to_string(i) + " is missing from the triangle");
  }
}

}  // namespace

PlanePair make_plane_pair(std::vector<Proj> lines, RatVec coeffs) {
  if (lines.size() != coeffs.size())
    fail("ValidationError", "need exactly one coefficient per line");
  if (lines.empty()) fail("ValidationError", "empty arrangement");
  std::vector<Proj> norm;
  norm.reserve(lines.size());
  for (const Proj& l : lines) norm.push_back(normalize(l));
  for (size_t i = 0; i < norm.size(); ++i)
    for (size_t j = 0; j < i; ++j)
      if (norm[i] == norm[j])
        fail("DuplicateLine", "lines " + std::to_string(j) + " and " + std::to_string(i));
  for (const Rat& c : coeffs)
    if (c < 0 || c > 1) fail("CoefficientRange", "coefficients must lie in [0,1]");
  return PlanePair{std::move(norm), std::move(coeffs)};
}

Triangle make_triangle(const PlanePair& pair, int a, int b, int c) {
  int n = static_cast<int>(pair.lines.size());
  if (a < 0 || b < 0 || c < 0 || a >= n || b >= n || c >= n || a == b || a == c || b == c)
    fail("ValidationError", "triangle needs three distinct line indices");
  std::array<int, 3> idx{a, b, c};
  std::sort(idx.begin(), idx.end());
  if (concurrent(pair, idx[0], idx[1], idx[2]))
    fail("ValidationError", "the three lines are concurrent");
  return Triangle{idx};
}

std::vector<IncidencePoint> incidence_points(const PlanePair& pair) {
  return incidence_of(pair.lines);
}

bool arrangement_lc(const std::vector<Proj>& lines, const RatVec& coeffs) {
  for (const Rat& c : coeffs)
    if (c > 1) return false;
  for (const IncidencePoint& p : incidence_of(lines)) {
    Rat mult(0);
    for (int li : p.lines) mult += coeffs[li];
    if (mult > 2) return false;
  }
  return true;
}

ArrangementReport check_pair(const PlanePair& pair) {
  ArrangementReport r;
  Rat total(0);
  for (const Rat& c : pair.coeffs) total += c;
  r.complexity = Rat(3) - total;
  r.lc = arrangement_lc(pair.lines, pair.coeffs);
  r.log_cy = r.lc && total == 3;
  return r;
}

LambdaReport lambda_invariants(const PlanePair& pair, const Triangle& t) {
  check_associated(pair, t);

  Rat lambda1 = pair.coeffs[t.lines[0]];
  for (int li : t.lines) lambda1 = std::min(lambda1, pair.coeffs[li]);
  if (lambda1 == 1) return LambdaReport{Rat(1), Rat(1)};

  // Each constraint on the peel parameter is linear, so lambda2 is the
  // intersection of an interval family:
  //   line L outside T:            b_L/(1-t) <= 1      =>  t <= 1 - b_L
  //   point p, c = |T-lines at p|: (a - c t)/(1-t) <= 2 =>  a - 2 <= (c-2) t,
  // with c <= 2 since T is non-concurrent. For c = 2 this is the t-free
  // requirement a <= 2; for c < 2 it bounds t <= (2-a)/(2-c).
  Rat lambda2 = lambda1;
  auto in_triangle = [&](int li) {
    return std::find(t.lines.begin(), t.lines.end(), li) != t.lines.end();
  };
  for (size_t i = 0; i < pair.lines.size(); ++i) {
    if (in_triangle(static_cast<int>(i))) continue;
    lambda2 = std::min(lambda2, Rat(Rat(1) - pair.coeffs[i]));
  }
  for (const IncidencePoint& p : incidence_points(pair)) {
    Rat a(0);
    int c = 0;
    for (int li : p.lines) {
      a += pair.coeffs[li];
      if (in_triangle(li)) ++c;
    }
    if (c < 2)
      lambda2 = std::min(lambda2, Rat((Rat(2) - a) / Rat(2 - c)));
    else if (a > 2)
      fail("NotLC", "point multiplicity exceeds 2");
  }
  if (lambda2 < 0) fail("NotLC", "pair is not log canonical");
  return LambdaReport{lambda1, lambda2};
}

std::vector<Triangle> associated_triangles(const PlanePair& pair) {
  int n = static_cast<int>(pair.lines.size());
  std::vector<int> ones;
  for (int i = 0; i < n; ++i)
    if (pair.coeffs[i] == 1) ones.push_back(i);
  std::vector<Triangle> out;
  for (int a = 0; a < n; ++a) {
    if (pair.coeffs[a] <= 0) continue;
    for (int b = a + 1; b < n; ++b) {
      if (pair.coeffs[b] <= 0) continue;
      for (int c = b + 1; c < n; ++c) {
        if (pair.coeffs[c] <= 0) continue;
        if (concurrent(pair, a, b, c)) continue;
        bool has_ones = true;
        for (int o : ones)
          if (o != a && o != b && o != c) {
            has_ones = false;
            break;
          }
        if (!has_ones) continue;
        out.push_back(Triangle{{a, b, c}});
      }
    }
  }
  return out;
}

std::vector<WeightedTriangle> decompose(const PlanePair& pair, std::optional<Triangle> force) {
  ArrangementReport report = check_pair(pair);
  if (!report.log_cy || report.complexity != 0)
    fail("NotLogCYComplexityZero", "decompose needs a log Calabi-Yau pair of complexity zero");

  std::vector<Triangle> tris = associated_triangles(pair);
  int forced = -1;
  if (force) {
    check_associated(pair, *force);
    for (size_t k = 0; k < tris.size(); ++k)
      if (tris[k] == *force) forced = static_cast<int>(k);
    if (forced < 0) fail("NotAssociated", "forced triangle is not associated to the pair");
  }
  if (tris.empty())
    fail("Infeasible",
         "no associated triangle exists; the input violates the decompose precondition or "
         "this is a bug");

  int n = static_cast<int>(pair.lines.size());
  int nv = static_cast<int>(tris.size());
  std::vector<RatVec> rows(n + 1, RatVec(nv, Rat(0)));
  RatVec rhs(n + 1);
  for (int k = 0; k < nv; ++k)
    for (int li : tris[k].lines) rows[li][k] = 1;
  for (int li = 0; li < n; ++li) rhs[li] = pair.coeffs[li];
  for (int k = 0; k < nv; ++k) rows[n][k] = 1;
  rhs[n] = 1;

  RatVec objective(nv, Rat(0));
  if (forced >= 0) objective[forced] = -1;  // maximize the forced weight
  lp::Result sol = lp::solve(rows, rhs, objective);
  if (sol.status != lp::Status::Optimal)
    fail("Infeasible",
         "no convex decomposition into associated triangles exists; the input violates the "
         "decompose precondition or this is a bug");
  if (forced >= 0 && sol.x[forced] == 0)
    fail("Infeasible", "every decomposition gives the forced triangle weight zero");

  std::vector<WeightedTriangle> out;
  for (int k = 0; k < nv; ++k)
    if (sol.x[k] > 0) out.push_back(WeightedTriangle{tris[k], sol.x[k]});
  return out;
}

}  // namespace toric
