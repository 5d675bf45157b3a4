// Structural invariants of Cayley tables: centers, derived subgroups,
// conjugacy classes, quotients, homomorphisms, abelian invariants.
#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "group_table.hpp"

namespace fgx {

struct Subgroup {
  const GroupTable* parent = nullptr;
  std::vector<int> elements;       // sorted
  std::vector<char> member;        // size parent->order

  int size() const { return int(elements.size()); }
  bool contains(int g) const { return member[g] != 0; }
  bool contains_all(const Subgroup& other) const {
    for (int g : other.elements)
      if (!member[g]) return false;
    return true;
  }
  bool same_elements(const Subgroup& other) const {
    return parent == other.parent && elements == other.elements;
  }
};

inline Subgroup make_subgroup(const GroupTable& g, std::vector<int> elems) {
  Subgroup s;
  s.parent = &g;
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  s.elements = std::move(elems);
  s.member.assign(g.order, 0);
  for (int x : s.elements) {
    if (x < 0 || x >= g.order) fail("subgroup element out of range");
    s.member[x] = 1;
  }
  return s;
}

// Closure of a generating set under products; BFS over new elements.
inline Subgroup subgroup_generated(const GroupTable& g, const std::vector<int>& gens) {
  std::vector<char> in(g.order, 0);
  std::vector<int> elems{g.identity}, frontier{g.identity};
  in[g.identity] = 1;
  for (int x : gens)
    if (x < 0 || x >= g.order) fail("generator index out of range");
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int x : frontier)
      for (int s : gens) {
        for (int y : {g.mul(x, s), g.mul(s, x)}) {
          if (!in[y]) {
            in[y] = 1;
            elems.push_back(y);
            next.push_back(y);
          }
        }
      }
    frontier = std::move(next);
  }
  return make_subgroup(g, std::move(elems));
}

inline Subgroup trivial_subgroup(const GroupTable& g) { return make_subgroup(g, {g.identity}); }

inline Subgroup whole_group(const GroupTable& g) {
  std::vector<int> all(g.order);
  for (int i = 0; i < g.order; ++i) all[i] = i;
  return make_subgroup(g, std::move(all));
}

inline Subgroup center(const GroupTable& g) {
  std::vector<int> z;
  for (int x = 0; x < g.order; ++x) {
    bool central = true;
    for (int y = 0; y < g.order; ++y)
      if (g.mul(x, y) != g.mul(y, x)) { central = false; break; }
    if (central) z.push_back(x);
  }
  return make_subgroup(g, std::move(z));
}

inline int commutator(const GroupTable& g, int x, int y) { return g.commutator(x, y); }

inline Subgroup derived_subgroup(const GroupTable& g) {
  std::vector<int> comms;
  std::vector<char> seen(g.order, 0);
  for (int x = 0; x < g.order; ++x)
    for (int y = 0; y < g.order; ++y) {
      int c = g.commutator(x, y);
      if (!seen[c]) { seen[c] = 1; comms.push_back(c); }
    }
  return subgroup_generated(g, comms);
}

inline bool is_abelian(const GroupTable& g) {
  for (int x = 0; x < g.order; ++x)
    for (int y = x + 1; y < g.order; ++y)
      if (g.mul(x, y) != g.mul(y, x)) return false;
  return true;
}

inline std::vector<std::vector<int>> conjugacy_classes(const GroupTable& g) {
  std::vector<int> cls(g.order, -1);
  std::vector<std::vector<int>> classes;
  for (int x = 0; x < g.order; ++x) {
    if (cls[x] >= 0) continue;
    int id = int(classes.size());
    std::vector<int> orbit;
    for (int h = 0; h < g.order; ++h) {
      int y = g.conj(h, x);
      if (cls[y] < 0) { cls[y] = id; orbit.push_back(y); }
    }
    std::sort(orbit.begin(), orbit.end());
    classes.push_back(std::move(orbit));
  }
  return classes;
}

inline std::vector<int> class_map(const GroupTable& g, const std::vector<std::vector<int>>& classes) {
  std::vector<int> cls(g.order, -1);
  for (int i = 0; i < int(classes.size()); ++i)
    for (int x : classes[i]) cls[x] = i;
  return cls;
}

inline std::map<int, int> element_orders(const GroupTable& g) {
  std::map<int, int> hist;
  for (int x = 0; x < g.order; ++x) ++hist[g.element_order(x)];
  return hist;
}

inline long long exponent(const GroupTable& g) {
  long long e = 1;
  for (int x = 0; x < g.order; ++x) {
    long long o = g.element_order(x);
    e = e / gcd_ll(e, o) * o;
  }
  return e;
}

inline bool is_normal(const GroupTable& g, const Subgroup& n) {
  for (int x : n.elements)
    for (int h = 0; h < g.order; ++h)
      if (!n.contains(g.conj(h, x))) return false;
  return true;
}

struct Homomorphism {
  const GroupTable* source = nullptr;
  const GroupTable* target = nullptr;
  std::vector<int> images;  // size source->order

  int apply(int x) const { return images[x]; }
};

inline bool verify_homomorphism(const Homomorphism& h) {
  const GroupTable& s = *h.source;
  const GroupTable& t = *h.target;
  if (h.images.size() != size_t(s.order)) return false;
  for (int v : h.images)
    if (v < 0 || v >= t.order) return false;
  if (h.images[s.identity] != t.identity) return false;
  for (int x = 0; x < s.order; ++x)
    for (int y = 0; y < s.order; ++y)
      if (h.images[s.mul(x, y)] != t.mul(h.images[x], h.images[y])) return false;
  return true;
}

inline Subgroup kernel(const Homomorphism& h) {
  std::vector<int> ker;
  for (int x = 0; x < h.source->order; ++x)
    if (h.images[x] == h.target->identity) ker.push_back(x);
  return make_subgroup(*h.source, std::move(ker));
}

inline Subgroup image(const Homomorphism& h) {
  std::vector<int> img(h.images.begin(), h.images.end());
  return make_subgroup(*h.target, std::move(img));
}

inline bool is_bijective(const Homomorphism& h) {
  if (h.source->order != h.target->order) return false;
  std::vector<char> seen(h.target->order, 0);
  for (int v : h.images) {
    if (seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

// Quotient G/N for normal N. Cosets are indexed in order of their minimal
// element; the stored group is shared so the projection stays valid when
// the result is moved around.
struct QuotientResult {
  std::shared_ptr<const GroupTable> group;
  Homomorphism projection;  // source G -> *group
};

inline QuotientResult quotient(const GroupTable& g, const Subgroup& n) {
  if (!is_normal(g, n)) fail("subgroup is not normal; quotient undefined");
  std::vector<int> coset_of(g.order, -1);
  std::vector<int> reps;
  for (int x = 0; x < g.order; ++x) {
    if (coset_of[x] >= 0) continue;
    int id = int(reps.size());
    reps.push_back(x);
    for (int h : n.elements) coset_of[g.mul(x, h)] = id;
  }
  int q = int(reps.size());
  std::vector<std::string> lab(q);
  for (int i = 0; i < q; ++i) lab[i] = g.label(reps[i]) + "N";
  QuotientResult res;
  res.group = std::make_shared<GroupTable>(
      make_group(q, [&](int a, int b) { return coset_of[g.mul(reps[a], reps[b])]; }, std::move(lab)));
  res.projection.source = &g;
  res.projection.target = res.group.get();
  res.projection.images = std::move(coset_of);
  return res;
}

// Extracts a subgroup as a standalone group table (elements reindexed
// in sorted order), with the inclusion-position map as labels.
inline GroupTable subgroup_as_group(const GroupTable& g, const Subgroup& s) {
  std::vector<int> pos(g.order, -1);
  for (int i = 0; i < s.size(); ++i) pos[s.elements[i]] = i;
  std::vector<std::string> lab(s.size());
  for (int i = 0; i < s.size(); ++i) lab[i] = g.label(s.elements[i]);
  return make_group(s.size(),
                    [&](int a, int b) {
                      int v = pos[g.mul(s.elements[a], s.elements[b])];
                      if (v < 0) fail("subgroup is not closed under multiplication");
                      return v;
                    },
                    std::move(lab));
}

namespace detail {

// Basis of a finite abelian p-group: greedily split off an element of
// maximal order in the current quotient.
inline std::vector<std::pair<int, long long>> abelian_p_basis(const GroupTable& a,
                                                              const std::vector<int>& pgroup) {
  std::vector<std::pair<int, long long>> basis;  // (element, order in quotient)
  Subgroup h = trivial_subgroup(a);
  while (h.size() < int(pgroup.size())) {
    int best = -1;
    long long best_ord = 0;
    for (int x : pgroup) {
      if (h.contains(x)) continue;
      long long o = 1;
      int y = x;
      while (!h.contains(y)) { y = a.mul(y, x); ++o; }  // order of xH in the quotient
      if (o > best_ord) { best_ord = o; best = x; }
    }
    basis.emplace_back(best, best_ord);
    std::vector<int> gens = h.elements;
    gens.push_back(best);
    h = subgroup_generated(a, gens);
  }
  return basis;
}

}  // namespace detail

// Generators g_i and orders d_i with A = <g_1> x ... x <g_r>, grouped by prime.
inline std::vector<std::pair<int, long long>> abelian_basis(const GroupTable& a) {
  if (!is_abelian(a)) fail("abelian_basis requires an abelian group");
  std::vector<std::pair<int, long long>> basis;
  long long n = a.order;
  for (long long p = 2; p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    std::vector<int> pg;
    for (int x = 0; x < a.order; ++x) {
      long long o = a.element_order(x);
      bool ppow = true;
      while (o > 1) {
        if (o % p) { ppow = false; break; }
        o /= p;
      }
      if (ppow) pg.push_back(x);
    }
    auto pb = detail::abelian_p_basis(a, pg);
    basis.insert(basis.end(), pb.begin(), pb.end());
  }
  return basis;
}

// Invariant-factor decomposition d_1 | d_2 | ... of a finite abelian group,
// assembled from the primary decomposition. All factors > 1.
inline std::vector<long long> abelian_invariants(const GroupTable& a) {
  auto basis = abelian_basis(a);
  std::map<long long, std::vector<long long>> per_prime;  // p -> descending p-power orders
  for (auto& [g, d] : basis) {
    (void)g;
    long long p = 2;
    long long o = d;
    while (o % p) ++p;
    per_prime[p].push_back(d);
  }
  size_t rank = 0;
  for (auto& [p, v] : per_prime) {
    std::sort(v.rbegin(), v.rend());
    rank = std::max(rank, v.size());
  }
  std::vector<long long> inv(rank, 1);  // inv[0] = largest factor
  for (auto& [p, v] : per_prime)
    for (size_t i = 0; i < v.size(); ++i) inv[i] *= v[i];
  std::reverse(inv.begin(), inv.end());  // ascending divisibility d_1 | d_2 | ...
  inv.erase(std::remove(inv.begin(), inv.end(), 1LL), inv.end());
  return inv;
}

// Small generating set found greedily (largest closure gain, smallest index
// as tie-break); deterministic across runs.
inline std::vector<int> generating_set(const GroupTable& g) {
  std::vector<int> gens;
  Subgroup h = trivial_subgroup(g);
  while (h.size() < g.order) {
    int best = -1, best_sz = h.size();
    for (int x = 0; x < g.order; ++x) {
      if (h.contains(x)) continue;
      std::vector<int> cand = gens;
      cand.push_back(x);
      int sz = subgroup_generated(g, cand).size();
      if (sz > best_sz) { best_sz = sz; best = x; }
      if (sz == g.order) break;
    }
    gens.push_back(best);
    h = subgroup_generated(g, gens);
  }
  return gens;
}

}  // namespace fgx
