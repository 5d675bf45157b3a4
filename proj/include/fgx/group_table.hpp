// Finite groups as exact Cayley tables, axiom verification, products.
#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "common.hpp"

namespace fgx {

struct GroupTable {
  int order = 0;
  std::vector<int> table;   // row-major: table[i*order + j] = index of g_i * g_j
  int identity = 0;
  std::vector<int> inverses;
  std::vector<std::string> labels;  // optional, empty or size == order

  int mul(int i, int j) const { return table[size_t(i) * order + j]; }
  int inv(int i) const { return inverses[i]; }
  const int* row(int i) const { return table.data() + size_t(i) * order; }

  int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }  // g x g^-1
  int commutator(int x, int y) const { return mul(mul(x, y), mul(inv(x), inv(y))); }

  int pow(int g, long long e) const {
    int r = identity;
    if (e < 0) { g = inv(g); e = -e; }
    while (e--) r = mul(r, g);
    return r;
  }

  int element_order(int g) const {
    int r = g, o = 1;
    while (r != identity) { r = mul(r, g); ++o; }
    return o;
  }

  std::string label(int i) const {
    if (!labels.empty()) return labels[i];
    return "g" + std::to_string(i);
  }
};

struct AxiomReport {
  bool shape_ok = false;
  bool identity_ok = false;
  bool inverses_ok = false;
  bool rows_bijective = false;
  bool cols_bijective = false;
  bool associative = false;
  std::string detail;

  bool all_ok() const {
    return shape_ok && identity_ok && inverses_ok && rows_bijective && cols_bijective && associative;
  }
};

// Full brute-force check of the group axioms, including the complete
// n^3 associativity sweep.
inline AxiomReport verify_axioms(const GroupTable& g) {
  AxiomReport rep;
  const int n = g.order;
  if (n <= 0 || g.table.size() != size_t(n) * n || g.identity < 0 || g.identity >= n ||
      g.inverses.size() != size_t(n)) {
    rep.detail = "malformed table";
    return rep;
  }
  for (int v : g.table)
    if (v < 0 || v >= n) {
      rep.detail = "entry out of range";
      return rep;
    }
  rep.shape_ok = true;

  rep.identity_ok = true;
  for (int j = 0; j < n; ++j)
    if (g.mul(g.identity, j) != j || g.mul(j, g.identity) != j) {
      rep.identity_ok = false;
      rep.detail = "identity axiom fails at " + std::to_string(j);
      break;
    }

  rep.inverses_ok = true;
  for (int i = 0; i < n; ++i)
    if (g.inverses[i] < 0 || g.inverses[i] >= n || g.mul(i, g.inverses[i]) != g.identity ||
        g.mul(g.inverses[i], i) != g.identity) {
      rep.inverses_ok = false;
      rep.detail = "inverse axiom fails at " + std::to_string(i);
      break;
    }

  rep.rows_bijective = rep.cols_bijective = true;
  std::vector<char> seen(n);
  for (int i = 0; i < n && rep.rows_bijective; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    const int* r = g.row(i);
    for (int j = 0; j < n; ++j) seen[r[j]] = 1;
    for (int j = 0; j < n; ++j)
      if (!seen[j]) { rep.rows_bijective = false; rep.detail = "row " + std::to_string(i) + " not a permutation"; }
  }
  for (int j = 0; j < n && rep.cols_bijective; ++j) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int i = 0; i < n; ++i) seen[g.mul(i, j)] = 1;
    for (int i = 0; i < n; ++i)
      if (!seen[i]) { rep.cols_bijective = false; rep.detail = "column " + std::to_string(j) + " not a permutation"; }
  }

  // (g_i g_j) g_k == g_i (g_j g_k) for all triples.
  rep.associative = true;
  const int* t = g.table.data();
  for (int i = 0; i < n && rep.associative; ++i) {
    const int* ri = t + size_t(i) * n;
    for (int j = 0; j < n; ++j) {
      const int* rij = t + size_t(ri[j]) * n;
      const int* rj = t + size_t(j) * n;
      for (int k = 0; k < n; ++k) {
        if (rij[k] != ri[rj[k]]) {
          rep.associative = false;
          rep.detail = "associativity fails at (" + std::to_string(i) + "," + std::to_string(j) +
                       "," + std::to_string(k) + ")";
          break;
        }
      }
      if (!rep.associative) break;
    }
  }
  return rep;
}

// Builds a table from a multiplication callback and fills in identity
// and inverses. Throws if no identity or some inverse is missing.
inline GroupTable make_group(int order, const std::function<int(int, int)>& mul,
                             std::vector<std::string> labels = {}) {
  if (order <= 0) fail("group order must be positive");
  GroupTable g;
  g.order = order;
  g.table.resize(size_t(order) * order);
  for (int i = 0; i < order; ++i)
    for (int j = 0; j < order; ++j) {
      int v = mul(i, j);
      if (v < 0 || v >= order) fail("multiplication value out of range");
      g.table[size_t(i) * order + j] = v;
    }
  g.identity = -1;
  for (int e = 0; e < order && g.identity < 0; ++e) {
    bool ok = true;
    for (int j = 0; j < order; ++j)
      if (g.mul(e, j) != j || g.mul(j, e) != j) { ok = false; break; }
    if (ok) g.identity = e;
  }
  if (g.identity < 0) fail("table has no identity element");
  g.inverses.assign(order, -1);
  for (int i = 0; i < order; ++i) {
    for (int j = 0; j < order; ++j)
      if (g.mul(i, j) == g.identity && g.mul(j, i) == g.identity) { g.inverses[i] = j; break; }
    if (g.inverses[i] < 0) fail("element " + std::to_string(i) + " has no inverse");
  }
  if (!labels.empty() && labels.size() != size_t(order)) fail("label count mismatch");
  g.labels = std::move(labels);
  return g;
}

inline GroupTable cyclic_group(int n) {
  std::vector<std::string> lab(n);
  for (int i = 0; i < n; ++i) lab[i] = "r" + std::to_string(i);
  return make_group(n, [n](int i, int j) { return (i + j) % n; }, std::move(lab));
}

inline GroupTable trivial_group() { return cyclic_group(1); }

inline GroupTable direct_product(const GroupTable& g1, const GroupTable& g2) {
  int n1 = g1.order, n2 = g2.order;
  std::vector<std::string> lab(size_t(n1) * n2);
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n2; ++j) lab[size_t(i) * n2 + j] = "(" + g1.label(i) + "," + g2.label(j) + ")";
  return make_group(n1 * n2,
                    [&](int x, int y) {
                      int a1 = x / n2, a2 = x % n2, b1 = y / n2, b2 = y % n2;
                      return g1.mul(a1, b1) * n2 + g2.mul(a2, b2);
                    },
                    std::move(lab));
}

// Action of the group `actor` on the group `acted` by automorphisms.
struct ActionSpec {
  const GroupTable* actor = nullptr;
  const GroupTable* acted = nullptr;
  std::function<int(int, int)> apply;  // (actor element, acted element) -> acted element

  // Checks the automorphism and compatibility axioms of the action.
  void validate() const {
    const GroupTable& h = *actor;
    const GroupTable& n = *acted;
    for (int a = 0; a < h.order; ++a) {
      std::vector<char> seen(n.order, 0);
      for (int x = 0; x < n.order; ++x) {
        int y = apply(a, x);
        if (y < 0 || y >= n.order) fail("action value out of range");
        if (seen[y]) fail("action of element " + std::to_string(a) + " is not injective");
        seen[y] = 1;
      }
      for (int x = 0; x < n.order; ++x)
        for (int y = 0; y < n.order; ++y)
          if (apply(a, n.mul(x, y)) != n.mul(apply(a, x), apply(a, y)))
            fail("action of element " + std::to_string(a) + " is not an automorphism");
    }
    for (int x = 0; x < n.order; ++x) {
      if (apply(h.identity, x) != x) fail("action of identity is not trivial");
      for (int a = 0; a < h.order; ++a)
        for (int b = 0; b < h.order; ++b)
          if (apply(h.mul(a, b), x) != apply(a, apply(b, x))) fail("action is not a homomorphism");
    }
  }
};

// (n1,h1)(n2,h2) = (n1 * a(h1,n2), h1 h2); element index = n*|H| + h.
inline GroupTable semidirect_product(const GroupTable& n, const GroupTable& h, const ActionSpec& a) {
  if (a.actor != &h || a.acted != &n) fail("action groups do not match the product operands");
  a.validate();
  int nh = h.order;
  std::vector<std::string> lab(size_t(n.order) * nh);
  for (int i = 0; i < n.order; ++i)
    for (int j = 0; j < nh; ++j) lab[size_t(i) * nh + j] = "(" + n.label(i) + "," + h.label(j) + ")";
  return make_group(n.order * nh,
                    [&](int x, int y) {
                      int n1 = x / nh, h1 = x % nh, n2 = y / nh, h2 = y % nh;
                      return n.mul(n1, a.apply(h1, n2)) * nh + h.mul(h1, h2);
                    },
                    std::move(lab));
}

namespace detail {

inline std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace detail

// Symmetric group on n letters in its regular form: elements are the
// permutations in lexicographic order, product (s*t)(i) = s(t(i)).
inline GroupTable symmetric_group(int n) {
  if (n < 1 || n > 7) fail("symmetric_group supports 1 <= n <= 7");
  auto perms = detail::all_permutations(n);
  int order = int(perms.size());
  std::vector<std::string> lab(order);
  for (int i = 0; i < order; ++i) {
    std::string s;
    for (int v : perms[i]) s += std::to_string(v + 1);
    lab[i] = s;
  }
  auto rank = [&](const std::vector<int>& p) {
    return int(std::lower_bound(perms.begin(), perms.end(), p) - perms.begin());
  };
  return make_group(order,
                    [&](int x, int y) {
                      std::vector<int> c(n);
                      for (int i = 0; i < n; ++i) c[i] = perms[x][perms[y][i]];
                      return rank(c);
                    },
                    std::move(lab));
}

}  // namespace fgx
