#pragma once

#include <array>
#include <optional>
#include <vector>

#include "toric/numeric.hpp"

namespace toric {

// Pairs (P^2, B) with B supported on a line arrangement. Lines are stored as
// projective triples normalized so the first nonzero coordinate is 1.
//
// Log canonicity for such pairs is the pair of conditions: every coefficient
// is at most 1, and at every point the sum of the coefficients of the lines
// through it is at most 2. One blow-up per multiple point produces a simple
// normal crossings model, and the exceptional log discrepancy there is
// 2 minus the multiplicity, which makes the point condition both necessary
// and sufficient.
//
// Every reduced boundary divisor making (P^2, Delta) a toric log Calabi-Yau
// pair with Delta <= ceil(B) is anticanonical of degree 3 and supported on
// the arrangement, hence is exactly a triple of non-concurrent arrangement
// lines. Enumerating triangles of lines is therefore a complete search for
// associated boundaries.
struct PlanePair {
  std::vector<std::array<Rat, 3>> lines;  // normalized, pairwise distinct
  RatVec coeffs;                          // one per line, each in [0,1]
};

PlanePair make_plane_pair(std::vector<std::array<Rat, 3>> lines, RatVec coeffs);

// Three non-concurrent line indices; exactly the condition for the three
// lines to form a toric boundary of P^2.
struct Triangle {
  std::array<int, 3> lines;

  bool operator==(const Triangle& o) const = default;
};

Triangle make_triangle(const PlanePair& pair, int a, int b, int c);

struct IncidencePoint {
  std::array<Rat, 3> point;  // normalized projective representative
  std::vector<int> lines;    // all arrangement lines through the point
};

// All pairwise intersection points, deduplicated exactly, each with the full
// list of incident lines. Sorted by normalized coordinates.
std::vector<IncidencePoint> incidence_points(const PlanePair& pair);

struct ArrangementReport {
  bool lc = false;
  bool log_cy = false;
  Rat complexity;  // 3 - sum of coefficients
};

ArrangementReport check_pair(const PlanePair& pair);

// Raw log-canonicity test on unnormalized coefficient data; used directly by
// check_pair and as the independent sampling oracle for lambda2.
bool arrangement_lc(const std::vector<std::array<Rat, 3>>& lines, const RatVec& coeffs);

struct LambdaReport {
  Rat lambda1;
  Rat lambda2;
};

// lambda1 = min coefficient of B over the triangle's lines; lambda2 = the
// largest t in [0, lambda1] keeping (P^2, (B - t*T)/(1-t)) log canonical,
// solved exactly as an intersection of linear constraints in t. Returns
// (1, 1) when lambda1 = 1.
// Throws NotAssociated when floor(B) <= T <= ceil(B) fails, NotLC when the
// pair itself is not log canonical.
LambdaReport lambda_invariants(const PlanePair& pair, const Triangle& t);

// All non-concurrent triples of positive-coefficient lines containing every
// coefficient-one line, in lexicographic index order.
std::vector<Triangle> associated_triangles(const PlanePair& pair);

struct WeightedTriangle {
  Triangle triangle;
  Rat weight;  // positive
};

// Writes B exactly as a convex combination of associated triangles: weights
// are positive, sum to 1, and reconstruct B's coefficient vector line by
// line. Solved as exact rational feasibility over the triangle incidence
// matrix (simplex, Bland's rule on lexicographically ordered triangle
// columns), so the output is deterministic. With `force` set, the search is
// restricted to decompositions giving that triangle positive weight (the
// weight is maximized); Infeasible signals that no such decomposition
// exists. Requires check_pair to report log_cy (hence complexity zero).
std::vector<WeightedTriangle> decompose(const PlanePair& pair,
                                        std::optional<Triangle> force = std::nullopt);

}  // namespace toric
