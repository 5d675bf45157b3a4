// Linear algebra over Z/mZ: Howell-style echelon bases, kernels, and
// diagonalization for finitely generated Z/m-modules. Entries live in
// [0, m); m need not be prime.
#pragma once

#include <cstdint>
#include <vector>

#include "common.hpp"

namespace fgx {

using ZmVec = std::vector<uint32_t>;

namespace zm {

inline uint32_t norm(long long v, uint32_t m) { return uint32_t(mod_floor(v, m)); }

// r += c * s (mod m)
inline void add_mul(ZmVec& r, const ZmVec& s, uint32_t c, uint32_t m) {
  if (!c) return;
  for (size_t i = 0; i < r.size(); ++i) r[i] = uint32_t((uint64_t(r[i]) + uint64_t(c) * s[i]) % m);
}

inline int lead(const ZmVec& r) {
  for (size_t i = 0; i < r.size(); ++i)
    if (r[i]) return int(i);
  return -1;
}

// Unit u (mod m) with u*v == gcd(v, m) (mod m).
inline uint32_t unit_to_gcd(uint32_t v, uint32_t m) {
  long long g = gcd_ll(v, m);
  long long vp = v / g, mp = m / g;
  long long x, y;
  ext_gcd(vp % mp, mp, x, y);  // x = inverse of v/g mod m/g
  long long u0 = mod_floor(x, mp);
  for (long long t = 0;; ++t) {
    long long u = u0 + mp * t;
    if (u >= m) fail("unit_to_gcd: no unit found");  // cannot happen
    if (gcd_ll(u, m) == 1) return uint32_t(u);
  }
}

}  // namespace zm

// Row space basis over Z/m in echelon form with Howell's span property:
// pivots divide m, and every row-space vector supported beyond column c is
// a combination of rows with pivot beyond c.
class ZmBasis {
 public:
  ZmBasis(uint32_t m, int cols) : m_(m), cols_(cols), row_at_(cols, -1) {
    if (m < 2) fail("modulus must be at least 2");
  }

  uint32_t modulus() const { return m_; }
  int cols() const { return cols_; }
  int rank() const { return int(rows_.size()); }
  const std::vector<ZmVec>& rows() const { return rows_; }
  int row_with_pivot(int col) const { return row_at_[col]; }
  uint32_t pivot_value(int row) const { return rows_[row][pivots_[row]]; }
  int pivot_col(int row) const { return pivots_[row]; }

  void insert(ZmVec r) {
    if (r.size() != size_t(cols_)) fail("row length mismatch");
    std::vector<ZmVec> stack;
    stack.push_back(std::move(r));
    while (!stack.empty()) {
      ZmVec w = std::move(stack.back());
      stack.pop_back();
      while (true) {
        int c = zm::lead(w);
        if (c < 0) break;
        uint32_t v = w[c];
        int at = row_at_[c];
        if (at < 0) {
          uint32_t u = zm::unit_to_gcd(v, m_);
          for (auto& x : w) x = uint32_t(uint64_t(x) * u % m_);
          uint32_t g = w[c];
          store(c, w);
          if (m_ / g > 1) {
            ZmVec ann(cols_, 0);
            zm::add_mul(ann, w, uint32_t(m_ / g % m_), m_);
            stack.push_back(std::move(ann));
          }
          break;
        }
        uint32_t p = rows_[at][c];
        if (v % p == 0) {
          zm::add_mul(w, rows_[at], zm::norm(-(long long)(v / p), m_), m_);
          continue;
        }
        // pivot does not divide the entry: replace by the gcd combination
        long long x, y;
        long long g = ext_gcd(p, v, x, y);
        ZmVec nr(cols_, 0);
        zm::add_mul(nr, rows_[at], zm::norm(x, m_), m_);
        zm::add_mul(nr, w, zm::norm(y, m_), m_);
        ZmVec old = rows_[at];
        unstore(at);
        zm::add_mul(old, nr, zm::norm(-(p / g), m_), m_);   // leading entry now past c
        zm::add_mul(w, nr, zm::norm(-(v / g), m_), m_);
        uint32_t u = zm::unit_to_gcd(nr[c], m_);
        if (u != 1)
          for (auto& e : nr) e = uint32_t(uint64_t(e) * u % m_);
        uint32_t gg = nr[c];
        store(c, nr);
        if (m_ / gg > 1) {
          ZmVec ann(cols_, 0);
          zm::add_mul(ann, nr, uint32_t(m_ / gg % m_), m_);
          stack.push_back(std::move(ann));
        }
        stack.push_back(std::move(old));
      }
    }
  }

  // Residual of r after reduction against the basis; zero iff r lies in
  // the row space. When `coeffs` is given it receives the multipliers
  // lambda_i with r = residual + sum lambda_i * row_i (mod m).
  ZmVec reduce(ZmVec r, ZmVec* coeffs = nullptr) const {
    if (coeffs) coeffs->assign(rows_.size(), 0);
    while (true) {
      int c = zm::lead(r);
      if (c < 0) return r;
      int at = row_at_[c];
      if (at < 0) return r;
      uint32_t p = rows_[at][c];
      if (r[c] % p != 0) return r;  // not in the span
      uint32_t q = r[c] / p;
      zm::add_mul(r, rows_[at], zm::norm(-(long long)q, m_), m_);
      if (coeffs) (*coeffs)[at] = uint32_t(((*coeffs)[at] + q) % m_);
    }
  }

  bool contains(const ZmVec& r) const { return zm::lead(reduce(r)) < 0; }

 private:
  void store(int c, ZmVec w) {
    rows_.push_back(std::move(w));
    pivots_.push_back(c);
    row_at_[c] = int(rows_.size()) - 1;
  }
  void unstore(int at) {
    int c = pivots_[at];
    row_at_[c] = -1;
    // swap-remove, fixing the moved row's index
    int last = int(rows_.size()) - 1;
    if (at != last) {
      rows_[at] = std::move(rows_[last]);
      pivots_[at] = pivots_[last];
      row_at_[pivots_[at]] = at;
    }
    rows_.pop_back();
    pivots_.pop_back();
  }

  uint32_t m_;
  int cols_;
  std::vector<ZmVec> rows_;
  std::vector<int> pivots_;
  std::vector<int> row_at_;
};

// Generators of {v : B v == 0 (mod m)} for the row space spanned by
// `basis` (viewing each basis row as one linear condition on v).
inline std::vector<ZmVec> zm_kernel(const ZmBasis& basis) {
  uint32_t m = basis.modulus();
  int n = basis.cols();
  int r = basis.rank();
  ZmBasis work(m, r + n);
  for (int i = 0; i < n; ++i) {
    ZmVec row(r + n, 0);
    for (int k = 0; k < r; ++k) row[k] = basis.rows()[k][i];
    row[r + i] = 1;
    work.insert(std::move(row));
  }
  std::vector<ZmVec> out;
  for (int k = 0; k < work.rank(); ++k) {
    if (work.pivot_col(k) < r) continue;
    const ZmVec& row = work.rows()[k];
    out.emplace_back(row.begin() + r, row.end());
  }
  return out;
}

struct ZmDiagonal {
  std::vector<long long> invariants;   // gcd-normalized diagonal, ascending chain, then m per free column
  std::vector<ZmVec> coordinate_rows;  // rows of Q^{-1}: generator coordinates per column
};

// Diagonalizes the row span of `rows` over Z/m by unimodular row and
// column operations; returns per-column annihilator divisors d (so the
// cokernel is the direct sum of Z_d) together with the inverse column
// transform for extracting cokernel generators.
inline ZmDiagonal zm_diagonalize(std::vector<ZmVec> a, uint32_t m, int cols) {
  int rows = int(a.size());
  std::vector<ZmVec> qinv(cols, ZmVec(cols, 0));
  for (int i = 0; i < cols; ++i) qinv[i][i] = 1;

  auto col_pair_op = [&](int t, int j, long long x, long long y, long long vp, long long pp) {
    // col_t' = x col_t + y col_j ; col_j' = -vp col_t + pp col_j  (det 1)
    for (int i = 0; i < rows; ++i) {
      uint64_t ct = a[i][t], cj = a[i][j];
      a[i][t] = zm::norm((long long)(x * (long long)ct + y * (long long)cj), m);
      a[i][j] = zm::norm((long long)(-vp * (long long)ct + pp * (long long)cj), m);
    }
    // Qinv rows: row_t' = pp row_t + vp row_j ; row_j' = -y row_t + x row_j
    for (int k = 0; k < cols; ++k) {
      long long rt = qinv[t][k], rj = qinv[j][k];
      qinv[t][k] = zm::norm(pp * rt + vp * rj, m);
      qinv[j][k] = zm::norm(-y * rt + x * rj, m);
    }
  };

  int t = 0;
  int nmin = std::min(rows, cols);
  while (t < nmin) {
    int pi = -1, pj = -1;
    long long best = 0;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j)
        if (a[i][j]) {
          long long g = gcd_ll(a[i][j], m);
          if (pi < 0 || g < best) { best = g; pi = i; pj = j; }
        }
    if (pi < 0) break;
    std::swap(a[t], a[pi]);
    if (pj != t) {
      for (int i = 0; i < rows; ++i) std::swap(a[i][t], a[i][pj]);
      std::swap(qinv[t], qinv[pj]);
    }
    while (true) {
      bool clean = true;
      for (int i = t + 1; i < rows; ++i) {
        uint32_t v = a[i][t];
        if (!v) continue;
        uint32_t p = a[t][t];
        long long g = gcd_ll(p, m);
        if (v % g == 0) {
          // g = unit * p (mod m): subtract the right multiple of row t
          uint32_t u = zm::unit_to_gcd(p, m);
          long long k = (v / g) % m;
          zm::add_mul(a[i], a[t], zm::norm(-(k * u), m), m);
        } else {
          long long x, y;
          long long gg = ext_gcd((long long)p, (long long)v, x, y);
          ZmVec nt(a[t].size());
          for (size_t k = 0; k < nt.size(); ++k)
            nt[k] = zm::norm(x * (long long)a[t][k] + y * (long long)a[i][k], m);
          ZmVec ni(a[t].size());
          for (size_t k = 0; k < ni.size(); ++k)
            ni[k] = zm::norm(-(long long)(v / gg) * (long long)a[t][k] +
                                 (long long)(p / gg) * (long long)a[i][k],
                             m);
          a[t] = std::move(nt);
          a[i] = std::move(ni);
          clean = false;
        }
      }
      for (int j = t + 1; j < cols; ++j) {
        uint32_t v = a[t][j];
        if (!v) continue;
        uint32_t p = a[t][t];
        long long g = gcd_ll(p, m);
        if (v % g == 0) {
          // col_j -= k * col_t with k*p == v (mod m)
          uint32_t u = zm::unit_to_gcd(p, m);
          long long k = ((v / g) % m * u) % m;
          for (int i = 0; i < rows; ++i)
            a[i][j] = zm::norm((long long)a[i][j] - k * (long long)a[i][t], m);
          for (int kk = 0; kk < cols; ++kk)
            qinv[t][kk] = zm::norm((long long)qinv[t][kk] + k * (long long)qinv[j][kk], m);
        } else {
          long long x, y;
          long long gg = ext_gcd((long long)p, (long long)v, x, y);
          col_pair_op(t, j, x, y, v / gg, p / gg);
          clean = false;
        }
        if (a[t][j]) clean = false;
      }
      if (!clean) continue;
      bool colzero = true;
      for (int i = t + 1; i < rows; ++i)
        if (a[i][t]) colzero = false;
      if (!colzero) continue;
      // divisibility of the remaining block by the pivot
      long long pg = gcd_ll(a[t][t], m);
      bool fixed = false;
      for (int i = t + 1; i < rows && !fixed; ++i)
        for (int j = t + 1; j < cols && !fixed; ++j)
          if (a[i][j] % pg != 0) {
            for (int k = 0; k < cols; ++k) a[t][k] = zm::norm((long long)a[t][k] + a[i][k], m);
            fixed = true;
          }
      if (!fixed) break;
    }
    ++t;
  }

  ZmDiagonal d;
  d.coordinate_rows = std::move(qinv);
  for (int c = 0; c < cols; ++c) {
    long long v = (c < t && c < nmin) ? a[c][c] : 0;
    d.invariants.push_back(v ? gcd_ll(v, m) : (long long)m);
  }
  return d;
}

}  // namespace fgx
