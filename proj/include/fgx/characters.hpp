// Exact character tables via class-sum matrices over a prime field and
// cyclotomic lifting, plus the spin-type partition of irreducibles by
// their central character on a given central subgroup.
#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "group_table.hpp"
#include "isomorphism.hpp"
#include "structure.hpp"

namespace fgx {

// Element of Z[x]/(x^e - 1); character values use the canonical
// representation as root-of-unity multiplicity vectors.
struct CycPoly {
  int e = 1;
  std::vector<long long> c;

  static CycPoly zero(int e) { return {e, std::vector<long long>(e, 0)}; }
  static CycPoly constant(int e, long long v) {
    CycPoly p = zero(e);
    p.c[0] = v;
    return p;
  }
  static CycPoly root_power(int e, long long k, long long mult = 1) {
    CycPoly p = zero(e);
    p.c[size_t(mod_floor(k, e))] += mult;
    return p;
  }

  CycPoly add(const CycPoly& o) const {
    CycPoly r = *this;
    for (int i = 0; i < e; ++i) r.c[i] = checked_add(r.c[i], o.c[i]);
    return r;
  }
  CycPoly sub(const CycPoly& o) const {
    CycPoly r = *this;
    for (int i = 0; i < e; ++i) r.c[i] = checked_add(r.c[i], -o.c[i]);
    return r;
  }
  CycPoly mul(const CycPoly& o) const {
    CycPoly r = zero(e);
    for (int i = 0; i < e; ++i) {
      if (!c[i]) continue;
      for (int j = 0; j < e; ++j) {
        if (!o.c[j]) continue;
        int k = (i + j) % e;
        r.c[k] = checked_add(r.c[k], checked_mul(c[i], o.c[j]));
      }
    }
    return r;
  }
  CycPoly scaled(long long v) const {
    CycPoly r = *this;
    for (auto& x : r.c) x = checked_mul(x, v);
    return r;
  }
  // complex conjugation: zeta -> zeta^{-1}
  CycPoly conj() const {
    CycPoly r = zero(e);
    for (int i = 0; i < e; ++i) r.c[size_t((e - i) % e)] = c[i];
    return r;
  }
  bool coeffs_zero() const {
    for (long long v : c)
      if (v) return false;
    return true;
  }
};

namespace detail {

// polynomial exact division in Z[x]; both in ascending-degree coefficients
inline std::vector<long long> poly_divide_exact(std::vector<long long> num,
                                                const std::vector<long long>& den) {
  int dn = int(num.size()) - 1, dd = int(den.size()) - 1;
  while (dn >= 0 && num[dn] == 0) --dn;
  while (dd >= 0 && den[dd] == 0) --dd;
  if (dd < 0) fail("polynomial division by zero");
  std::vector<long long> q(std::max(dn - dd + 1, 0), 0);
  for (int k = dn - dd; k >= 0; --k) {
    long long lead = num[k + dd];
    if (lead % den[dd] != 0) fail("polynomial division is not exact");
    long long f = lead / den[dd];
    q[k] = f;
    for (int i = 0; i <= dd; ++i) num[k + i] = checked_add(num[k + i], -checked_mul(f, den[i]));
  }
  for (long long v : num)
    if (v) fail("polynomial division is not exact");
  return q;
}

}  // namespace detail

// Cyclotomic polynomial Phi_e, ascending coefficients.
inline std::vector<long long> cyclotomic_polynomial(int e) {
  // Phi_e(x) = prod over d | e of (x^d - 1)^{mu(e/d)}
  auto mu = [](int n) {
    int m = 1;
    for (int p = 2; p * p <= n; ++p) {
      if (n % p) continue;
      n /= p;
      if (n % p == 0) return 0;
      m = -m;
    }
    if (n > 1) m = -m;
    return m;
  };
  std::vector<long long> num{1}, den{1};
  for (int d = 1; d <= e; ++d) {
    if (e % d) continue;
    int m = mu(e / d);
    if (m == 0) continue;
    std::vector<long long> f(d + 1, 0);
    f[0] = -1;
    f[d] = 1;
    std::vector<long long>& target = (m > 0) ? num : den;
    std::vector<long long> prod(target.size() + d, 0);
    for (size_t i = 0; i < target.size(); ++i)
      for (size_t j = 0; j < f.size(); ++j)
        prod[i + j] = checked_add(prod[i + j], checked_mul(target[i], f[j]));
    target = std::move(prod);
  }
  return detail::poly_divide_exact(num, den);
}

// Exact zero test in Z[zeta_e]: the representative is divisible by Phi_e.
inline bool cyc_is_zero(const CycPoly& p) {
  if (p.coeffs_zero()) return true;
  std::vector<long long> phi = cyclotomic_polynomial(p.e);
  std::vector<long long> rem = p.c;
  int dd = int(phi.size()) - 1;
  for (int k = int(rem.size()) - 1; k >= dd; --k) {
    long long f = rem[k];  // phi is monic
    if (!f) continue;
    for (int i = 0; i <= dd; ++i) rem[k - dd + i] = checked_add(rem[k - dd + i], -checked_mul(f, phi[i]));
  }
  for (long long v : rem)
    if (v) return false;
  return true;
}

inline bool cyc_equal(const CycPoly& a, const CycPoly& b) { return cyc_is_zero(a.sub(b)); }

namespace fpf {

inline long long pow_mod(long long b, long long e, long long p) {
  long long r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

inline long long inv_mod(long long a, long long p) { return pow_mod(mod_floor(a, p), p - 2, p); }

inline bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline long long smallest_primitive_root(long long p) {
  std::vector<long long> qs;
  long long n = p - 1;
  for (long long q = 2; q * q <= n; ++q)
    if (n % q == 0) {
      qs.push_back(q);
      while (n % q == 0) n /= q;
    }
  if (n > 1) qs.push_back(n);
  for (long long g = 2; g < p; ++g) {
    bool ok = true;
    for (long long q : qs)
      if (pow_mod(g, (p - 1) / q, p) == 1) { ok = false; break; }
    if (ok) return g;
  }
  fail("no primitive root found");
}

}  // namespace fpf

struct CharacterTable {
  int k = 0;        // number of conjugacy classes == number of irreducibles
  long long e = 1;  // group exponent; character values live in Z[zeta_e]
  long long p = 0;  // the working prime
  std::vector<int> class_rep;
  std::vector<long long> class_size;
  std::vector<int> class_of;   // element -> class index
  std::vector<int> rep_order;  // order of the class representative
  std::vector<int> degrees;
  std::vector<std::vector<CycPoly>> values;  // values[irrep][class]

  const CycPoly& value(int chi, int cls) const { return values[chi][cls]; }
};

namespace detail {

struct FpMatrix {
  int n = 0;
  long long p = 0;
  std::vector<long long> a;
  long long& at(int i, int j) { return a[size_t(i) * n + j]; }
  long long at(int i, int j) const { return a[size_t(i) * n + j]; }
};

inline long long fp_det(FpMatrix m) {
  long long det = 1;
  for (int c = 0; c < m.n; ++c) {
    int pivot = -1;
    for (int r = c; r < m.n; ++r)
      if (m.at(r, c)) { pivot = r; break; }
    if (pivot < 0) return 0;
    if (pivot != c) {
      for (int j = 0; j < m.n; ++j) std::swap(m.at(pivot, j), m.at(c, j));
      det = m.p - det;
    }
    det = det % m.p * m.at(c, c) % m.p;
    long long inv = fpf::inv_mod(m.at(c, c), m.p);
    for (int r = c + 1; r < m.n; ++r) {
      if (!m.at(r, c)) continue;
      long long f = m.at(r, c) * inv % m.p;
      for (int j = c; j < m.n; ++j) m.at(r, j) = mod_floor(m.at(r, j) - f * m.at(c, j), m.p);
    }
  }
  return mod_floor(det, m.p);
}

// basis of the nullspace of m (column vectors)
inline std::vector<std::vector<long long>> fp_nullspace(FpMatrix m) {
  int n = m.n;
  long long p = m.p;
  std::vector<int> pivot_col_of_row(n, -1);
  int rank = 0;
  for (int c = 0; c < n && rank < n; ++c) {
    int pr = -1;
    for (int r = rank; r < n; ++r)
      if (m.at(r, c)) { pr = r; break; }
    if (pr < 0) continue;
    for (int j = 0; j < n; ++j) std::swap(m.at(pr, j), m.at(rank, j));
    long long inv = fpf::inv_mod(m.at(rank, c), p);
    for (int j = 0; j < n; ++j) m.at(rank, j) = m.at(rank, j) * inv % p;
    for (int r = 0; r < n; ++r) {
      if (r == rank || !m.at(r, c)) continue;
      long long f = m.at(r, c);
      for (int j = 0; j < n; ++j) m.at(r, j) = mod_floor(m.at(r, j) - f * m.at(rank, j), p);
    }
    pivot_col_of_row[rank] = c;
    ++rank;
  }
  std::vector<char> is_pivot(n, 0);
  for (int r = 0; r < rank; ++r) is_pivot[pivot_col_of_row[r]] = 1;
  std::vector<std::vector<long long>> basis;
  for (int c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    std::vector<long long> v(n, 0);
    v[c] = 1;
    for (int r = 0; r < rank; ++r) v[pivot_col_of_row[r]] = mod_floor(-m.at(r, c), p);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace detail

// Dixon's method: simultaneous eigenvectors of the class-sum matrices over
// F_p give the central characters, degrees follow from orthogonality, and
// values lift exactly to root-of-unity multiplicity vectors. All table
// invariants are re-verified before returning.
inline CharacterTable character_table(const GroupTable& g) {
  CharacterTable t;
  const int n = g.order;

  // classes, identity class first, then by minimal element
  auto classes = conjugacy_classes(g);
  std::stable_sort(classes.begin(), classes.end(), [&](const auto& a, const auto& b) {
    bool ia = std::find(a.begin(), a.end(), g.identity) != a.end();
    bool ib = std::find(b.begin(), b.end(), g.identity) != b.end();
    if (ia != ib) return ia;
    return a[0] < b[0];
  });
  t.k = int(classes.size());
  t.class_of = class_map(g, classes);
  for (auto& c : classes) {
    t.class_rep.push_back(c[0]);
    t.class_size.push_back((long long)c.size());
    t.rep_order.push_back(g.element_order(c[0]));
  }
  t.e = exponent(g);

  // smallest prime p = 1 (mod e) with p > 2 sqrt(|G|)
  long long p = t.e + 1;
  while (true) {
    if (p * p > 4 * (long long)n && fpf::is_prime(p)) break;
    p += t.e;
    if (p > 1000000) fail("no suitable prime found below the bound");
  }
  t.p = p;
  const int k = t.k;

  // class constant matrices: a_i[j][l] = #{(u,v) in C_i x C_j : uv = rep_l}
  std::vector<detail::FpMatrix> cm(k);
  for (int i = 0; i < k; ++i) {
    cm[i].n = k;
    cm[i].p = p;
    cm[i].a.assign(size_t(k) * k, 0);
    for (int l = 0; l < k; ++l)
      for (int u : classes[i]) {
        int v = g.mul(g.inv(u), t.class_rep[l]);
        ++cm[i].at(t.class_of[v], l);
      }
  }

  // split the common eigenspaces, processing class sums in order
  std::vector<std::vector<std::vector<long long>>> spaces;  // each: list of column vectors
  {
    std::vector<std::vector<long long>> full;
    for (int i = 0; i < k; ++i) {
      std::vector<long long> e_i(k, 0);
      e_i[i] = 1;
      full.push_back(std::move(e_i));
    }
    spaces.push_back(std::move(full));
  }
  for (int mi = 1; mi < k; ++mi) {
    bool all_split = true;
    for (auto& s : spaces)
      if (s.size() > 1) all_split = false;
    if (all_split) break;
    std::vector<std::vector<std::vector<long long>>> next;
    for (auto& basis : spaces) {
      int dim = int(basis.size());
      if (dim == 1) {
        next.push_back(basis);
        continue;
      }
      // restriction R with  M * B = B * R, solved through pivot rows of B
      std::vector<std::vector<long long>> mb(dim, std::vector<long long>(k, 0));
      for (int b = 0; b < dim; ++b)
        for (int r = 0; r < k; ++r) {
          long long acc = 0;
          for (int c = 0; c < k; ++c) acc = (acc + cm[mi].at(r, c) * basis[b][c]) % p;
          mb[b][r] = acc;
        }
      // row-reduce B^T to find pivot rows and expansion coefficients
      detail::FpMatrix bt;
      bt.n = k;
      bt.p = p;
      bt.a.assign(size_t(k) * k, 0);  // k x k with first dim columns = basis
      for (int b = 0; b < dim; ++b)
        for (int r = 0; r < k; ++r) bt.at(r, b) = basis[b][r];
      // gaussian elimination to express mb in terms of basis columns
      // solve basis_matrix * x = mb_col for each column
      std::vector<int> pivot_rows;
      {
        detail::FpMatrix w = bt;
        std::vector<char> used(k, 0);
        for (int c = 0; c < dim; ++c) {
          int pr = -1;
          for (int r = 0; r < k; ++r)
            if (!used[r] && w.at(r, c)) { pr = r; break; }
          if (pr < 0) fail("basis matrix is singular; internal error");
          used[pr] = 1;
          pivot_rows.push_back(pr);
          long long inv = fpf::inv_mod(w.at(pr, c), p);
          for (int j = 0; j < dim; ++j) w.at(pr, j) = w.at(pr, j) * inv % p;
          for (int r = 0; r < k; ++r) {
            if (r == pr || !w.at(r, c)) continue;
            long long f = w.at(r, c);
            for (int j = 0; j < dim; ++j) w.at(r, j) = mod_floor(w.at(r, j) - f * w.at(pr, j), p);
          }
        }
      }
      // solve the dim x dim system on the pivot rows
      detail::FpMatrix sys;
      sys.n = dim;
      sys.p = p;
      sys.a.assign(size_t(dim) * dim, 0);
      for (int i2 = 0; i2 < dim; ++i2)
        for (int j2 = 0; j2 < dim; ++j2) sys.at(i2, j2) = basis[j2][pivot_rows[i2]];
      // invert sys
      detail::FpMatrix inv;
      inv.n = dim;
      inv.p = p;
      inv.a.assign(size_t(dim) * dim, 0);
      for (int i2 = 0; i2 < dim; ++i2) inv.at(i2, i2) = 1;
      {
        detail::FpMatrix w = sys;
        for (int c = 0; c < dim; ++c) {
          int pr = -1;
          for (int r = c; r < dim; ++r)
            if (w.at(r, c)) { pr = r; break; }
          if (pr < 0) fail("restriction solve is singular; internal error");
          for (int j = 0; j < dim; ++j) {
            std::swap(w.at(pr, j), w.at(c, j));
            std::swap(inv.at(pr, j), inv.at(c, j));
          }
          long long iv = fpf::inv_mod(w.at(c, c), p);
          for (int j = 0; j < dim; ++j) {
            w.at(c, j) = w.at(c, j) * iv % p;
            inv.at(c, j) = inv.at(c, j) * iv % p;
          }
          for (int r = 0; r < dim; ++r) {
            if (r == c || !w.at(r, c)) continue;
            long long f = w.at(r, c);
            for (int j = 0; j < dim; ++j) {
              w.at(r, j) = mod_floor(w.at(r, j) - f * w.at(c, j), p);
              inv.at(r, j) = mod_floor(inv.at(r, j) - f * inv.at(c, j), p);
            }
          }
        }
      }
      detail::FpMatrix rmat;
      rmat.n = dim;
      rmat.p = p;
      rmat.a.assign(size_t(dim) * dim, 0);
      for (int col = 0; col < dim; ++col)
        for (int row = 0; row < dim; ++row) {
          long long acc = 0;
          for (int j = 0; j < dim; ++j) acc = (acc + inv.at(row, j) * mb[col][pivot_rows[j]]) % p;
          rmat.at(row, col) = acc;
        }
      // eigenvalues by determinant scan, ascending
      int found_dim = 0;
      for (long long lam = 0; lam < p && found_dim < dim; ++lam) {
        detail::FpMatrix shifted = rmat;
        for (int i2 = 0; i2 < dim; ++i2) shifted.at(i2, i2) = mod_floor(shifted.at(i2, i2) - lam, p);
        if (detail::fp_det(shifted) != 0) continue;
        auto null_basis = detail::fp_nullspace(shifted);
        std::vector<std::vector<long long>> sub;
        for (auto& nv : null_basis) {
          std::vector<long long> vec(k, 0);
          for (int r = 0; r < k; ++r) {
            long long acc = 0;
            for (int b = 0; b < dim; ++b) acc = (acc + basis[b][r] * nv[b]) % p;
            vec[r] = acc;
          }
          sub.push_back(std::move(vec));
        }
        found_dim += int(sub.size());
        next.push_back(std::move(sub));
      }
      if (found_dim != dim) fail("class-sum matrix failed to split completely; internal error");
    }
    spaces = std::move(next);
  }
  for (auto& s : spaces)
    if (s.size() != 1) fail("common eigenspaces are not one-dimensional; internal error");

  // central characters omega, normalized to omega(identity class) = 1
  std::vector<std::vector<long long>> omega;
  for (auto& s : spaces) {
    std::vector<long long> v = s[0];
    if (v[0] == 0) fail("eigenvector vanishes on the identity class; internal error");
    long long f = fpf::inv_mod(v[0], p);
    for (auto& x : v) x = x * f % p;
    omega.push_back(std::move(v));
  }
  std::sort(omega.begin(), omega.end());  // deterministic irrep order

  // inverse classes
  std::vector<int> inv_class(k);
  for (int l = 0; l < k; ++l) inv_class[l] = t.class_of[g.inv(t.class_rep[l])];

  // degrees from the orthogonality relation
  std::vector<std::vector<long long>> chi_mod(k, std::vector<long long>(k, 0));
  t.degrees.resize(k);
  for (int i = 0; i < k; ++i) {
    long long s = 0;
    for (int l = 0; l < k; ++l) {
      long long term = omega[i][l] * omega[i][inv_class[l]] % p;
      s = (s + term * fpf::inv_mod(t.class_size[l] % p, p)) % p;
    }
    long long d2 = (long long)n % p * fpf::inv_mod(s, p) % p;
    long long deg = -1;
    for (long long d = 1; 2 * d < p; ++d)
      if (d * d % p == d2) { deg = d; break; }
    if (deg < 0) fail("degree is not a square residue; internal error");
    t.degrees[i] = int(deg);
    for (int l = 0; l < k; ++l)
      chi_mod[i][l] = deg % p * omega[i][l] % p * fpf::inv_mod(t.class_size[l] % p, p) % p;
  }

  // lift to multiplicity vectors over the e-th roots of unity
  long long theta = fpf::pow_mod(fpf::smallest_primitive_root(p), (p - 1) / t.e, p);
  std::vector<long long> theta_pow(t.e);
  theta_pow[0] = 1;
  for (int j = 1; j < t.e; ++j) theta_pow[j] = theta_pow[j - 1] * theta % p;
  std::vector<std::vector<int>> power_class(k, std::vector<int>(t.e));
  for (int l = 0; l < k; ++l) {
    int x = g.identity;
    for (int s = 0; s < t.e; ++s) {
      power_class[l][s] = t.class_of[x];
      x = g.mul(x, t.class_rep[l]);
    }
  }
  long long e_inv = fpf::inv_mod(t.e % p, p);
  t.values.assign(k, std::vector<CycPoly>(k, CycPoly::zero(int(t.e))));
  for (int i = 0; i < k; ++i)
    for (int l = 0; l < k; ++l) {
      CycPoly val = CycPoly::zero(int(t.e));
      long long total = 0;
      for (int j = 0; j < t.e; ++j) {
        long long m = 0;
        for (int s = 0; s < t.e; ++s) {
          long long th = theta_pow[size_t((long long)j * s % t.e)];
          m = (m + chi_mod[i][power_class[l][s]] * fpf::inv_mod(th, p)) % p;
        }
        m = m * e_inv % p;
        if (m > t.degrees[i]) fail("multiplicity lift exceeds the degree; internal error");
        val.c[j] = m;
        total += m;
      }
      if (total != t.degrees[i]) fail("multiplicities do not sum to the degree; internal error");
      t.values[i][l] = std::move(val);
    }

  // full verification: counts, degree sum, exact orthogonality
  long long deg2 = 0;
  for (int d : t.degrees) deg2 += (long long)d * d;
  if (deg2 != n) fail("degree squares do not sum to the group order");
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      CycPoly acc = CycPoly::zero(int(t.e));
      for (int l = 0; l < k; ++l)
        acc = acc.add(t.values[i][l].mul(t.values[j][l].conj()).scaled(t.class_size[l]));
      CycPoly target = CycPoly::constant(int(t.e), i == j ? n : 0);
      if (!cyc_equal(acc, target)) fail("row orthogonality fails; internal error");
    }
  for (int l = 0; l < k; ++l)
    for (int l2 = 0; l2 < k; ++l2) {
      CycPoly acc = CycPoly::zero(int(t.e));
      for (int i = 0; i < k; ++i) acc = acc.add(t.values[i][l].mul(t.values[i][l2].conj()));
      long long target = (l == l2) ? n / t.class_size[l] : 0;
      if (!cyc_equal(acc, CycPoly::constant(int(t.e), target))) fail("column orthogonality fails; internal error");
    }
  return t;
}

inline std::vector<int> irrep_degrees(const GroupTable& g) {
  CharacterTable t = character_table(g);
  std::vector<int> d = t.degrees;
  std::sort(d.begin(), d.end());
  return d;
}

// Fingerprint with the optional irreducible-degree multiset filled in.
inline Fingerprint fingerprint_with_degrees(const GroupTable& g) {
  Fingerprint f = fingerprint(g);
  f.irrep_degrees = irrep_degrees(g);
  return f;
}

struct SpinTypePartition {
  std::vector<int> center_elements;  // the central subgroup A, sorted
  struct Type {
    std::vector<long long> tau;  // root-of-unity exponent of the central character per element of A
    std::vector<int> irreps;     // indices into the character table
    std::vector<int> degrees;
  };
  std::vector<Type> types;
};

// Partition of the irreducibles of H by central character on A.
inline SpinTypePartition spin_types(const GroupTable& h, const Subgroup& a,
                                    const CharacterTable* precomputed = nullptr) {
  Subgroup z = center(h);
  for (int x : a.elements)
    if (!z.contains(x)) fail("spin types require a central subgroup");
  CharacterTable local;
  const CharacterTable* t = precomputed;
  if (!t) {
    local = character_table(h);
    t = &local;
  }
  SpinTypePartition part;
  part.center_elements = a.elements;
  for (int i = 0; i < t->k; ++i) {
    std::vector<long long> tau;
    for (int x : a.elements) {
      const CycPoly& v = t->values[i][t->class_of[x]];
      // a central element acts as a scalar: one multiplicity carries the degree
      int hot = -1;
      for (int j = 0; j < v.e; ++j) {
        if (v.c[j] == 0) continue;
        if (hot >= 0 || v.c[j] != t->degrees[i]) fail("central character is not scalar; internal error");
        hot = j;
      }
      if (hot < 0) fail("central character vanished; internal error");
      tau.push_back(hot);
    }
    int found = -1;
    for (size_t ty = 0; ty < part.types.size(); ++ty)
      if (part.types[ty].tau == tau) { found = int(ty); break; }
    if (found < 0) {
      part.types.push_back({tau, {}, {}});
      found = int(part.types.size()) - 1;
    }
    part.types[found].irreps.push_back(i);
    part.types[found].degrees.push_back(t->degrees[i]);
  }
  return part;
}

}  // namespace fgx
