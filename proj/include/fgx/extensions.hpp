// Central-extension machinery: efficiency checks, one-step extension
// witnesses through commuting pairs, the representation-group criterion,
// and the exhaustive stairway search.
#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cohomology.hpp"
#include "group_table.hpp"
#include "isomorphism.hpp"
#include "structure.hpp"

namespace fgx {

struct EfficiencyReport {
  bool central_ok = false;  // A inside Z(H)
  bool derived_ok = false;  // A inside [H,H]
  std::optional<bool> quotient_iso_ok;
  std::optional<bool> multiplier_match;

  bool efficient() const { return central_ok && derived_ok; }
};

inline EfficiencyReport is_efficient(const GroupTable& h, const Subgroup& a) {
  EfficiencyReport r;
  Subgroup z = center(h);
  Subgroup d = derived_subgroup(h);
  r.central_ok = z.contains_all(a);
  r.derived_ok = d.contains_all(a);
  return r;
}

// Data certifying a one-step efficient central extension: K covers H with
// cyclic central kernel <z> = <[xi, eta]> over a commuting pair in H.
struct ExtensionWitness {
  std::shared_ptr<const GroupTable> k;
  Homomorphism alpha;  // *k -> H
  int xi = -1, eta = -1, z = -1;
  int d = 0;
};

struct OneStepReport {
  // preconditions on the pair (x, y) in H
  bool pair_commutes = false;
  bool pair_orders_match = false;  // both orders equal d > 1
  // covering-map sanity
  bool alpha_homomorphism = false;
  bool alpha_surjective = false;
  bool kernel_is_generated_by_z = false;
  // condition (A)
  bool xi_covers_x = false;
  bool eta_covers_y = false;
  bool commutator_equals_z = false;
  bool lifts_agree = false;  // all central shifts of the lifts give the same commutator
  bool z_has_order_d = false;
  bool z_covers_identity = false;
  // condition (B)
  bool z_central_in_k = false;
  bool z_in_derived_of_k = false;

  bool all_ok() const {
    return pair_commutes && pair_orders_match && alpha_homomorphism && alpha_surjective &&
           kernel_is_generated_by_z && xi_covers_x && eta_covers_y && commutator_equals_z &&
           lifts_agree && z_has_order_d && z_covers_identity && z_central_in_k && z_in_derived_of_k;
  }
};

inline OneStepReport verify_one_step(const ExtensionWitness& w, int x, int y) {
  OneStepReport r;
  const GroupTable& k = *w.k;
  const GroupTable& h = *w.alpha.target;
  r.pair_commutes = h.mul(x, y) == h.mul(y, x);
  r.pair_orders_match = w.d > 1 && h.element_order(x) == w.d && h.element_order(y) == w.d;
  r.alpha_homomorphism = verify_homomorphism(w.alpha);
  r.alpha_surjective = image(w.alpha).size() == h.order;
  Subgroup ker = kernel(w.alpha);
  Subgroup zgen = subgroup_generated(k, {w.z});
  r.kernel_is_generated_by_z = ker.same_elements(zgen);
  r.xi_covers_x = w.alpha.apply(w.xi) == x;
  r.eta_covers_y = w.alpha.apply(w.eta) == y;
  r.commutator_equals_z = k.commutator(w.xi, w.eta) == w.z;
  r.lifts_agree = true;
  for (int a = 0; a < w.d; ++a)
    for (int b = 0; b < w.d; ++b) {
      int xi_a = k.mul(w.xi, k.pow(w.z, a));
      int eta_b = k.mul(w.eta, k.pow(w.z, b));
      if (k.commutator(xi_a, eta_b) != w.z) r.lifts_agree = false;
    }
  r.z_has_order_d = k.element_order(w.z) == w.d;
  r.z_covers_identity = w.alpha.apply(w.z) == h.identity;
  r.z_central_in_k = center(k).contains(w.z);
  r.z_in_derived_of_k = derived_subgroup(k).contains(w.z);
  return r;
}

struct RepresentationGroupReport {
  EfficiencyReport efficiency;
  std::vector<long long> subgroup_invariants;
  std::vector<long long> multiplier_invariants;
  bool multiplier_match = false;
  bool quotient_isomorphic = false;

  bool positive() const {
    return efficiency.efficient() && multiplier_match && quotient_isomorphic;
  }
};

// Checks A <= Z(H) n [H,H], A ~ M(G) and H/A ~ G.
inline RepresentationGroupReport verify_representation_group(const GroupTable& h, const Subgroup& a,
                                                             const GroupTable& g,
                                                             H2Options opt = {}) {
  RepresentationGroupReport r;
  r.efficiency = is_efficient(h, a);
  GroupTable asub = subgroup_as_group(h, a);
  r.subgroup_invariants = is_abelian(asub) ? abelian_invariants(asub) : std::vector<long long>{-1};
  r.multiplier_invariants = schur_multiplier(g, 0, opt).invariant_factors;
  r.multiplier_match = r.subgroup_invariants == r.multiplier_invariants;
  r.efficiency.multiplier_match = r.multiplier_match;
  if (is_normal(h, a)) {
    QuotientResult q = quotient(h, a);
    r.quotient_isomorphic = is_isomorphic(*q.group, g).has_value();
  }
  r.efficiency.quotient_iso_ok = r.quotient_isomorphic;
  return r;
}

struct StairwayHit {
  ExtensionWitness witness;
  int x = -1, y = -1;          // source commuting pair in G
  std::string pair_label;
  int cocycle_class = -1;      // index of the scanned cohomology class
};

// Enumerates commuting pairs of order d up to simultaneous conjugacy and
// all H^2(G, Z_d) classes; keeps extensions where lifted commutators
// genuinely have order d, deduplicated by isomorphism type.
inline std::vector<StairwayHit> stairway_search(const GroupTable& g, int d, int max_results = 0,
                                                H2Options opt = {}) {
  if (d < 2) fail("stairway_search requires d >= 2");
  std::vector<StairwayHit> hits;

  // commuting same-order pairs up to simultaneous conjugacy
  std::vector<std::pair<int, int>> pairs;
  {
    std::vector<char> is_order_d(g.order, 0);
    for (int x = 0; x < g.order; ++x) is_order_d[x] = g.element_order(x) == d;
    for (int x = 0; x < g.order; ++x) {
      if (!is_order_d[x]) continue;
      for (int y = 0; y < g.order; ++y) {
        if (!is_order_d[y] || g.mul(x, y) != g.mul(y, x)) continue;
        bool canonical = true;
        for (int c = 0; c < g.order && canonical; ++c) {
          int xc = g.conj(c, x), yc = g.conj(c, y);
          if (xc < x || (xc == x && yc < y)) canonical = false;
        }
        if (canonical) pairs.emplace_back(x, y);
      }
    }
  }
  if (pairs.empty()) return hits;

  CocycleSolver solver(g, uint32_t(d), opt);
  std::vector<ZmVec> classes = solver.class_edge_vectors();

  std::vector<Fingerprint> hit_prints;
  for (size_t ci = 0; ci < classes.size(); ++ci) {
    CocycleTable f = solver.expand(classes[ci]);
    CentralExtensionResult ext = extension_from_cocycle(g, uint32_t(d), f);
    const GroupTable& k = *ext.ext;
    // cheap pre-scan: a pair qualifies iff the lifted commutator has order d,
    // which does not depend on the choice of lifts
    std::vector<std::pair<int, int>> qualifying;
    for (auto [x, y] : pairs)
      if (k.element_order(k.commutator(x, y)) == d) qualifying.emplace_back(x, y);
    if (qualifying.empty()) continue;
    // one representative per isomorphism type across all classes
    Fingerprint kprint = fingerprint(k);
    bool known = false;
    for (size_t hi = 0; hi < hits.size() && !known; ++hi) {
      if (!hit_prints[hi].equal_core(kprint)) continue;
      if (is_isomorphic(*hits[hi].witness.k, k).has_value()) known = true;
    }
    if (known) continue;
    for (auto [x, y] : qualifying) {
      ExtensionWitness w;
      w.k = ext.ext;
      w.alpha = ext.projection;
      w.xi = x;  // lift (0, x) has the same index as x
      w.eta = y;
      w.z = k.commutator(x, y);
      w.d = d;
      if (!verify_one_step(w, x, y).all_ok()) continue;
      StairwayHit hit;
      hit.witness = std::move(w);
      hit.x = x;
      hit.y = y;
      hit.pair_label = g.label(x) + "," + g.label(y);
      hit.cocycle_class = int(ci);
      hits.push_back(std::move(hit));
      hit_prints.push_back(kprint);
      break;
    }
    if (max_results > 0 && int(hits.size()) >= max_results) return hits;
  }
  return hits;
}

}  // namespace fgx
