#include "toric/linalg.hpp"

#include <algorithm>

#include "toric/error.hpp"

namespace toric {

IntMat IntMat::identity(int n) {
  IntMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMat IntMat::transposed() const {
  IntMat t(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
  return t;
}

IntMat mat_mul(const IntMat& x, const IntMat& y) {
  IntMat r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      if (x.at(i, k) == 0) continue;
      for (int j = 0; j < y.cols; ++j) r.at(i, j) += x.at(i, k) * y.at(k, j);
    }
  return r;
}

IntVec mat_apply(const IntMat& m, const IntVec& v) {
  IntVec r(m.rows, Int(0));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) r[i] += m.at(i, j) * v[j];
  return r;
}

IntMat mat_from_columns(const std::vector<IntVec>& cols) {
  if (cols.empty()) return IntMat(0, 0);
  IntMat m(static_cast<int>(cols[0].size()), static_cast<int>(cols.size()));
  for (int j = 0; j < m.cols; ++j)
    for (int i = 0; i < m.rows; ++i) m.at(i, j) = cols[j][i];
  return m;
}

IntMat mat_from_rows(const std::vector<IntVec>& rows) {
  if (rows.empty()) return IntMat(0, 0);
  IntMat m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j];
  return m;
}

Int det(const IntMat& m) {
  if (m.rows != m.cols) fail("DimensionMismatch", "determinant of a non-square matrix");
  int n = m.rows;
  if (n == 0) return 1;
  IntMat w = m;
  Int prev(1);
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (w.at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (w.at(i, k) != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Int t = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
        mpz_divexact(w.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = w.at(k, k);
  }
  return sign > 0 ? w.at(n - 1, n - 1) : -w.at(n - 1, n - 1);
}

bool is_unimodular(const IntMat& m) {
  if (m.rows != m.cols) return false;
  Int d = det(m);
  return d == 1 || d == -1;
}

Int vec_gcd(const IntVec& v) {
  Int g(0);
  for (const Int& x : v) g = gcd(g, x);
  return g;
}

bool is_zero(const IntVec& v) {
  for (const Int& x : v)
    if (x != 0) return false;
  return true;
}

IntVec primitive_vector(const IntVec& v) {
  Int g = vec_gcd(v);
  if (g == 0) fail("ZeroVector", "primitive_vector of the zero vector");
  IntVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) mpz_divexact(r[i].get_mpz_t(), v[i].get_mpz_t(), g.get_mpz_t());
  return r;
}

bool is_primitive(const IntVec& v) { return vec_gcd(v) == 1; }

namespace {

struct SnfWork {
  IntMat a, u, v;

  void swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < a.cols; ++c) std::swap(a.at(i, c), a.at(j, c));
    for (int c = 0; c < u.cols; ++c) std::swap(u.at(i, c), u.at(j, c));
  }
  void swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < a.rows; ++r) std::swap(a.at(r, i), a.at(r, j));
    for (int r = 0; r < v.rows; ++r) std::swap(v.at(r, i), v.at(r, j));
  }
  // row i -= q * row j
  void row_sub(int i, int j, const Int& q) {
    if (q == 0) return;
    for (int c = 0; c < a.cols; ++c) a.at(i, c) -= q * a.at(j, c);
    for (int c = 0; c < u.cols; ++c) u.at(i, c) -= q * u.at(j, c);
  }
  void col_sub(int i, int j, const Int& q) {
    if (q == 0) return;
    for (int r = 0; r < a.rows; ++r) a.at(r, i) -= q * a.at(r, j);
    for (int r = 0; r < v.rows; ++r) v.at(r, i) -= q * v.at(r, j);
  }
  void negate_row(int i) {
    for (int c = 0; c < a.cols; ++c) a.at(i, c) = -a.at(i, c);
    for (int c = 0; c < u.cols; ++c) u.at(i, c) = -u.at(i, c);
  }
};

}  // namespace

Snf smith_normal_form(const IntMat& input) {
  SnfWork w;
  w.a = input;
  w.u = IntMat::identity(input.rows);
  w.v = IntMat::identity(input.cols);
  int n = std::min(input.rows, input.cols);

  for (int t = 0; t < n; ++t) {
    // Deterministic pivot: smallest |entry| > 0, ties by lowest row then column.
    int pr = -1, pc = -1;
    Int best;
    for (int i = t; i < w.a.rows; ++i)
      for (int j = t; j < w.a.cols; ++j) {
        const Int& x = w.a.at(i, j);
        if (x == 0) continue;
        Int ax = abs(x);
        if (pr < 0 || ax < best) {
          best = ax;
          pr = i;
          pc = j;
        }
      }
    if (pr < 0) break;  // remaining submatrix is zero
    w.swap_rows(t, pr);
    w.swap_cols(t, pc);

    for (;;) {
      bool clean = true;
      for (int i = t + 1; i < w.a.rows; ++i) {
        if (w.a.at(i, t) == 0) continue;
        Int q = w.a.at(i, t) / w.a.at(t, t);  // truncated division
        w.row_sub(i, t, q);
        if (w.a.at(i, t) != 0) {
          // Remainder became the smaller pivot; promote it.
          w.swap_rows(t, i);
          clean = false;
        }
      }
      for (int j = t + 1; j < w.a.cols; ++j) {
        if (w.a.at(t, j) == 0) continue;
        Int q = w.a.at(t, j) / w.a.at(t, t);
        w.col_sub(j, t, q);
        if (w.a.at(t, j) != 0) {
          w.swap_cols(t, j);
          clean = false;
        }
      }
      if (!clean) continue;

      // Divisibility fix: the pivot must divide the full remaining block.
      bool fixed = false;
      for (int i = t + 1; i < w.a.rows && !fixed; ++i)
        for (int j = t + 1; j < w.a.cols && !fixed; ++j)
          if (w.a.at(i, j) % w.a.at(t, t) != 0) {
            w.row_sub(t, i, Int(-1));  // row t += row i, then re-clear
            fixed = true;
          }
      if (!fixed) break;
    }
    if (w.a.at(t, t) < 0) w.negate_row(t);
  }
  return Snf{w.u, w.a, w.v};
}

int rank(const IntMat& m) {
  Snf s = smith_normal_form(m);
  int r = 0;
  for (int i = 0; i < std::min(m.rows, m.cols); ++i)
    if (s.d.at(i, i) != 0) ++r;
  return r;
}

std::optional<RatVec> solve_rational(const IntMat& a, const RatVec& b) {
  int rows = a.rows, cols = a.cols;
  std::vector<RatVec> w(rows, RatVec(cols + 1, Rat(0)));
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) w[i][j] = Rat(a.at(i, j));
    w[i][cols] = b[i];
  }
  std::vector<int> pivot_col(rows, -1);
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (w[i][c] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(w[r], w[p]);
    Rat inv = w[r][c];
    for (int j = c; j <= cols; ++j) w[r][j] /= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || w[i][c] == 0) continue;
      Rat f = w[i][c];
      for (int j = c; j <= cols; ++j) w[i][j] -= f * w[r][j];
    }
    pivot_col[r] = c;
    ++r;
  }
  for (int i = r; i < rows; ++i)
    if (w[i][cols] != 0) return std::nullopt;
  RatVec x(cols, Rat(0));
  for (int i = 0; i < r; ++i) x[pivot_col[i]] = w[i][cols];
  return x;
}

std::optional<IntVec> solve_integer(const IntMat& a, const IntVec& b) {
  Snf s = smith_normal_form(a);
  IntVec ub = mat_apply(s.u, b);
  int n = std::min(a.rows, a.cols);
  IntVec y(a.cols, Int(0));
  for (int i = 0; i < a.rows; ++i) {
    Int d = (i < n) ? s.d.at(i, i) : Int(0);
    if (d == 0) {
      if (ub[i] != 0) return std::nullopt;
    } else {
      if (ub[i] % d != 0) return std::nullopt;
      mpz_divexact(y[i].get_mpz_t(), ub[i].get_mpz_t(), d.get_mpz_t());
    }
  }
  return mat_apply(s.v, y);
}

std::vector<IntVec> kernel_lattice_basis(const IntMat& a) {
  Snf s = smith_normal_form(a);
  int n = std::min(a.rows, a.cols);
  std::vector<IntVec> basis;
  for (int j = 0; j < a.cols; ++j) {
    bool in_kernel = (j >= n) || (s.d.at(j, j) == 0);
    if (!in_kernel) continue;
    IntVec col(a.cols);
    for (int i = 0; i < a.cols; ++i) col[i] = s.v.at(i, j);
    basis.push_back(std::move(col));
  }
  return basis;
}

std::optional<IntMat> integer_right_inverse(const IntMat& a) {
  Snf s = smith_normal_form(a);
  if (a.rows > a.cols) return std::nullopt;
  for (int i = 0; i < a.rows; ++i)
    if (s.d.at(i, i) != 1) return std::nullopt;
  // a = u^-1 d v^-1 with d = [I | 0]; a * (v [I;0] u) = identity.
  IntMat emb(a.cols, a.rows);
  for (int i = 0; i < a.rows; ++i) emb.at(i, i) = 1;
  return mat_mul(s.v, mat_mul(emb, s.u));
}

std::optional<Int> lattice_membership(const IntMat& a, const RatVec& b, const Int& bound) {
  if (static_cast<int>(b.size()) != a.rows)
    fail("DimensionMismatch", "lattice_membership: b has wrong length");
  Snf s = smith_normal_form(a);
  int n = std::min(a.rows, a.cols);
  RatVec ub(a.rows, Rat(0));
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.rows; ++j) ub[i] += Rat(s.u.at(i, j)) * b[j];
  Int m(1);
  for (int i = 0; i < a.rows; ++i) {
    Int d = (i < n) ? s.d.at(i, i) : Int(0);
    if (d == 0) {
      if (ub[i] != 0) return std::nullopt;
    } else {
      Rat t = ub[i] / Rat(d);
      m = lcm(m, denom(t));
    }
  }
  if (m > bound)
    fail("BoundExceeded", "minimal multiplier " + m.get_str() + " exceeds bound " + bound.get_str());
  return m;
}

}  // namespace toric
