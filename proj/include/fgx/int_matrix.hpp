// Exact integer matrices and Smith normal form with unimodular transforms.
// All arithmetic is overflow-checked; no entry is ever silently wrapped.
#pragma once

#include <string>
#include <vector>

#include "common.hpp"

namespace fgx {

struct IntMatrix {
  int rows = 0, cols = 0;
  std::vector<long long> a;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), a(size_t(r) * c, 0) {}

  long long& at(int i, int j) { return a[size_t(i) * cols + j]; }
  long long at(int i, int j) const { return a[size_t(i) * cols + j]; }

  static IntMatrix identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  static IntMatrix from_rows(const std::vector<std::vector<long long>>& rr) {
    if (rr.empty()) return IntMatrix(0, 0);
    IntMatrix m(int(rr.size()), int(rr[0].size()));
    for (int i = 0; i < m.rows; ++i) {
      if (rr[i].size() != size_t(m.cols)) fail("ragged row in matrix literal");
      for (int j = 0; j < m.cols; ++j) m.at(i, j) = rr[i][j];
    }
    return m;
  }

  IntMatrix mul(const IntMatrix& o) const {
    if (cols != o.rows) fail("matrix dimension mismatch in product");
    IntMatrix r(rows, o.cols);
    for (int i = 0; i < rows; ++i)
      for (int k = 0; k < cols; ++k) {
        long long v = at(i, k);
        if (!v) continue;
        for (int j = 0; j < o.cols; ++j)
          r.at(i, j) = checked_add(r.at(i, j), checked_mul(v, o.at(k, j)));
      }
    return r;
  }

  bool operator==(const IntMatrix& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

// Determinant by fraction-free (Bareiss) elimination; exact.
inline long long determinant(const IntMatrix& m) {
  if (m.rows != m.cols) fail("determinant of a non-square matrix");
  int n = m.rows;
  if (n == 0) return 1;
  IntMatrix w = m;
  long long prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (w.at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (w.at(i, k) != 0) { p = i; break; }
      if (p < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        long long num = checked_add(checked_mul(w.at(i, j), w.at(k, k)),
                                    -checked_mul(w.at(i, k), w.at(k, j)));
        w.at(i, j) = num / prev;
      }
    prev = w.at(k, k);
  }
  return sign * w.at(n - 1, n - 1);
}

struct SmithResult {
  IntMatrix s;  // diagonal, d_i | d_{i+1}, entries >= 0
  IntMatrix u;  // unimodular rows transform
  IntMatrix v;  // unimodular cols transform; s = u * m * v

  std::vector<long long> diagonal() const {
    std::vector<long long> d;
    for (int i = 0; i < std::min(s.rows, s.cols); ++i) d.push_back(s.at(i, i));
    return d;
  }
  std::vector<long long> nontrivial_invariants() const {
    std::vector<long long> d;
    for (long long v : diagonal())
      if (v > 1) d.push_back(v);
    return d;
  }
};

// Classical Smith reduction with minimal-pivot selection.
inline SmithResult smith_normal_form(const IntMatrix& m) {
  SmithResult r;
  r.s = m;
  r.u = IntMatrix::identity(m.rows);
  r.v = IntMatrix::identity(m.cols);
  IntMatrix& s = r.s;
  int nmin = std::min(m.rows, m.cols);

  auto row_op = [&](int dst, int src, long long f) {  // row dst += f * row src
    for (int j = 0; j < s.cols; ++j) s.at(dst, j) = checked_add(s.at(dst, j), checked_mul(f, s.at(src, j)));
    for (int j = 0; j < r.u.cols; ++j)
      r.u.at(dst, j) = checked_add(r.u.at(dst, j), checked_mul(f, r.u.at(src, j)));
  };
  auto col_op = [&](int dst, int src, long long f) {
    for (int i = 0; i < s.rows; ++i) s.at(i, dst) = checked_add(s.at(i, dst), checked_mul(f, s.at(i, src)));
    for (int i = 0; i < r.v.rows; ++i)
      r.v.at(i, dst) = checked_add(r.v.at(i, dst), checked_mul(f, r.v.at(i, src)));
  };
  auto row_swap = [&](int x, int y) {
    if (x == y) return;
    for (int j = 0; j < s.cols; ++j) std::swap(s.at(x, j), s.at(y, j));
    for (int j = 0; j < r.u.cols; ++j) std::swap(r.u.at(x, j), r.u.at(y, j));
  };
  auto col_swap = [&](int x, int y) {
    if (x == y) return;
    for (int i = 0; i < s.rows; ++i) std::swap(s.at(i, x), s.at(i, y));
    for (int i = 0; i < r.v.rows; ++i) std::swap(r.v.at(i, x), r.v.at(i, y));
  };
  auto row_negate = [&](int x) {
    for (int j = 0; j < s.cols; ++j) s.at(x, j) = -s.at(x, j);
    for (int j = 0; j < r.u.cols; ++j) r.u.at(x, j) = -r.u.at(x, j);
  };

  for (int t = 0; t < nmin; ++t) {
    while (true) {
      // minimal nonzero entry of the trailing submatrix becomes the pivot
      int pi = -1, pj = -1;
      long long best = 0;
      for (int i = t; i < s.rows; ++i)
        for (int j = t; j < s.cols; ++j) {
          long long v = s.at(i, j) < 0 ? -s.at(i, j) : s.at(i, j);
          if (v != 0 && (pi < 0 || v < best)) { best = v; pi = i; pj = j; }
        }
      if (pi < 0) { pi = -2; break; }
      row_swap(t, pi);
      col_swap(t, pj);
      bool clean = true;
      for (int i = t + 1; i < s.rows; ++i)
        if (s.at(i, t) != 0) {
          long long q = s.at(i, t) / s.at(t, t);
          row_op(i, t, -q);
          if (s.at(i, t) != 0) clean = false;
        }
      for (int j = t + 1; j < s.cols; ++j)
        if (s.at(t, j) != 0) {
          long long q = s.at(t, j) / s.at(t, t);
          col_op(j, t, -q);
          if (s.at(t, j) != 0) clean = false;
        }
      if (!clean) continue;
      // pivot must divide every remaining entry
      bool fixed = false;
      for (int i = t + 1; i < s.rows && !fixed; ++i)
        for (int j = t + 1; j < s.cols && !fixed; ++j)
          if (s.at(i, j) % s.at(t, t) != 0) {
            row_op(t, i, 1);
            fixed = true;
          }
      if (!fixed) break;
    }
    if (s.at(t, t) < 0) row_negate(t);
  }
  return r;
}

}  // namespace fgx
