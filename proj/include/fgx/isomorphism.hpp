// Isomorphism testing for small groups: invariant fingerprints plus
// backtracking over images of a generating tuple.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "structure.hpp"

namespace fgx {

struct Fingerprint {
  long long order = 0;
  long long center_order = 0;
  long long derived_order = 0;
  std::vector<long long> abelianization;
  long long class_count = 0;
  std::vector<std::pair<long long, long long>> order_histogram;  // (element order, count)
  std::optional<std::vector<int>> irrep_degrees;                 // filled by the character module

  bool equal_core(const Fingerprint& o) const {
    return order == o.order && center_order == o.center_order && derived_order == o.derived_order &&
           abelianization == o.abelianization && class_count == o.class_count &&
           order_histogram == o.order_histogram;
  }
  bool operator==(const Fingerprint& o) const {
    if (!equal_core(o)) return false;
    if (irrep_degrees && o.irrep_degrees && *irrep_degrees != *o.irrep_degrees) return false;
    return true;
  }
};

inline Fingerprint fingerprint(const GroupTable& g) {
  Fingerprint f;
  f.order = g.order;
  f.center_order = center(g).size();
  Subgroup d = derived_subgroup(g);
  f.derived_order = d.size();
  auto q = quotient(g, d);
  f.abelianization = abelian_invariants(*q.group);
  f.class_count = (long long)conjugacy_classes(g).size();
  for (auto& [o, c] : element_orders(g)) f.order_histogram.emplace_back(o, c);
  return f;
}

namespace detail {

// Per-element invariant vector used to constrain generator images.
inline std::vector<std::vector<int>> element_invariants(const GroupTable& g) {
  auto classes = conjugacy_classes(g);
  auto cls = class_map(g, classes);
  std::vector<std::vector<int>> inv(g.order);
  for (int x = 0; x < g.order; ++x) {
    int o = g.element_order(x);
    int sq = g.mul(x, x);
    int cu = g.mul(sq, x);
    inv[x] = {o, int(classes[cls[x]].size()), int(classes[cls[sq]].size()),
              int(classes[cls[cu]].size()), g.element_order(sq)};
  }
  return inv;
}

struct BfsTree {
  std::vector<int> order_of_visit;  // element indices, identity first
  std::vector<int> parent;          // parent element
  std::vector<int> via;             // generator position used to reach
};

inline BfsTree bfs_words(const GroupTable& g, const std::vector<int>& gens) {
  BfsTree t;
  t.parent.assign(g.order, -1);
  t.via.assign(g.order, -1);
  std::vector<char> seen(g.order, 0);
  seen[g.identity] = 1;
  t.order_of_visit.push_back(g.identity);
  for (size_t head = 0; head < t.order_of_visit.size(); ++head) {
    int x = t.order_of_visit[head];
    for (int gi = 0; gi < int(gens.size()); ++gi) {
      int y = g.mul(x, gens[gi]);
      if (!seen[y]) {
        seen[y] = 1;
        t.parent[y] = x;
        t.via[y] = gi;
        t.order_of_visit.push_back(y);
      }
    }
  }
  if (t.order_of_visit.size() != size_t(g.order)) fail("bfs_words: set does not generate the group");
  return t;
}

// Completes generator images to a full map along the BFS tree and checks
// it is a bijective homomorphism.
inline std::optional<std::vector<int>> try_extend(const GroupTable& g1, const GroupTable& g2,
                                                  const BfsTree& tree, const std::vector<int>& imgs) {
  std::vector<int> img(g1.order, -1);
  img[g1.identity] = g2.identity;
  for (size_t i = 1; i < tree.order_of_visit.size(); ++i) {
    int x = tree.order_of_visit[i];
    img[x] = g2.mul(img[tree.parent[x]], imgs[tree.via[x]]);
  }
  std::vector<char> seen(g2.order, 0);
  for (int v : img) {
    if (seen[v]) return std::nullopt;
    seen[v] = 1;
  }
  for (int x = 0; x < g1.order; ++x)
    for (int y = 0; y < g1.order; ++y)
      if (img[g1.mul(x, y)] != g2.mul(img[x], img[y])) return std::nullopt;
  return img;
}

}  // namespace detail

// Returns a verified isomorphism, or nullopt as a definitive negative.
inline std::optional<Homomorphism> is_isomorphic(const GroupTable& g1, const GroupTable& g2) {
  if (g1.order != g2.order) return std::nullopt;
  if (!fingerprint(g1).equal_core(fingerprint(g2))) return std::nullopt;

  std::vector<int> gens = generating_set(g1);
  detail::BfsTree tree = detail::bfs_words(g1, gens);
  auto inv1 = detail::element_invariants(g1);
  auto inv2 = detail::element_invariants(g2);

  // candidate images per generator, matching element invariants
  std::vector<std::vector<int>> cands(gens.size());
  for (size_t i = 0; i < gens.size(); ++i) {
    for (int h = 0; h < g2.order; ++h)
      if (inv2[h] == inv1[gens[i]]) cands[i].push_back(h);
    if (cands[i].empty()) return std::nullopt;
  }

  // partial-subgroup sizes in G1 for pruning
  std::vector<int> partial_size(gens.size());
  for (size_t i = 0; i < gens.size(); ++i)
    partial_size[i] = subgroup_generated(g1, std::vector<int>(gens.begin(), gens.begin() + i + 1)).size();

  std::vector<int> imgs(gens.size(), -1);
  std::optional<std::vector<int>> found;

  std::function<bool(size_t)> rec = [&](size_t pos) -> bool {
    if (pos == gens.size()) {
      found = detail::try_extend(g1, g2, tree, imgs);
      return found.has_value();
    }
    for (int h : cands[pos]) {
      imgs[pos] = h;
      bool ok = true;
      for (size_t i = 0; i < pos && ok; ++i) {
        int o1 = g1.element_order(g1.mul(gens[i], gens[pos]));
        int o2 = g2.element_order(g2.mul(imgs[i], imgs[pos]));
        if (o1 != o2) ok = false;
      }
      if (ok) {
        std::vector<int> sub(imgs.begin(), imgs.begin() + pos + 1);
        if (subgroup_generated(g2, sub).size() != partial_size[pos]) ok = false;
      }
      if (ok && rec(pos + 1)) return true;
    }
    imgs[pos] = -1;
    return false;
  };

  if (!rec(0)) return std::nullopt;
  Homomorphism h;
  h.source = &g1;
  h.target = &g2;
  h.images = *found;
  return h;
}

}  // namespace fgx
