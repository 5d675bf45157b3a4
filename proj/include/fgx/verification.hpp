// Data-driven verification registry: every structural claim the toolkit
// certifies is a named check; the CLI `verify` command and the acceptance
// suite both run from this table.
#pragma once

#include <chrono>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "catalogue.hpp"
#include "characters.hpp"
#include "cohomology.hpp"
#include "extensions.hpp"
#include "group_table.hpp"
#include "isomorphism.hpp"
#include "structure.hpp"

namespace fgx {

struct CheckResult {
  bool pass = false;
  std::string detail;
};

struct Check {
  std::string name;
  std::string claim;
  int criterion = 0;  // grouping index used by the acceptance suite
  bool slow = false;
  std::function<CheckResult()> run;
};

struct SuiteEntry {
  std::string name;
  std::string claim;
  int criterion = 0;
  bool pass = false;
  bool skipped = false;
  double ms = 0.0;
  std::string detail;
};

struct VerificationSuiteReport {
  std::vector<SuiteEntry> entries;
  bool all_pass = true;
};

namespace checks {

inline CheckResult ok(std::string detail = "") { return {true, std::move(detail)}; }
inline CheckResult bad(std::string detail) { return {false, std::move(detail)}; }

inline std::string join_inv(const std::vector<long long>& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

// ---- criterion 1: orders and axiom sweeps ----------------------------------

inline CheckResult catalogue_orders() {
  struct Row {
    const char* key;
    int order;
  };
  const Row rows[] = {{"G20", 18},  {"R54", 54},   {"RP54", 54}, {"G39", 27},
                      {"G81", 81},  {"G243", 243}, {"TPRIME(4)", 48}};
  std::ostringstream os;
  for (const Row& r : rows) {
    const GroupTable& g = build_named(r.key);
    if (g.order != r.order)
      return bad(std::string(r.key) + " has order " + std::to_string(g.order));
    auto t0 = std::chrono::steady_clock::now();
    AxiomReport rep = verify_axioms(g);
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    if (!rep.all_ok()) return bad(std::string(r.key) + ": " + rep.detail);
    if (g.order == 243) {
      os << "243^3 associativity sweep " << ms << " ms";
      if (ms > 2000.0) return bad("associativity sweep exceeded 2 s");
    }
  }
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      CatalogueKey k{CatalogueKey::G81VAR};
      k.a = a;
      k.b = b;
      const GroupTable& g = build_named(k);
      if (g.order != 81 || !verify_axioms(g).all_ok()) return bad(k.str() + " failed");
    }
  return ok(os.str());
}

// ---- criterion 2: normal form versus coset enumeration ---------------------

inline CheckResult cross_constructions() {
  for (const char* key : {"G20", "R54", "G39", "G81", "G243"}) {
    try {
      cross_check_catalogue(parse_catalogue_key(key));
    } catch (const std::exception& e) {
      return bad(e.what());
    }
  }
  return ok("all products of both tables compared");
}

// ---- criterion 3: centers and derived subgroups as element sets ------------

inline CheckResult centers_and_derived() {
  // expected sets come from the tuple coordinates
  auto expect = [](const GroupTable& g, const CatalogueKey& key,
                   const std::function<bool(const std::vector<int>&)>& pred) {
    const NormalFormScheme& sc = normal_form_scheme(key);
    std::vector<int> v;
    for (int i = 0; i < g.order; ++i)
      if (pred(sc.decode(i))) v.push_back(i);
    return make_subgroup(g, std::move(v));
  };
  {
    const GroupTable& h = build_named("R54");
    CatalogueKey k{CatalogueKey::R54};
    Subgroup want = expect(h, k, [](const std::vector<int>& t) { return !t[1] && !t[2] && !t[3]; });
    if (!center(h).same_elements(want)) return bad("center of the order-54 cover is not <z12>");
  }
  {
    const GroupTable& h = build_named("G81");
    CatalogueKey k{CatalogueKey::G81};
    Subgroup wantz = expect(h, k, [](const std::vector<int>& t) { return !t[1] && !t[2] && !t[3]; });
    if (!center(h).same_elements(wantz)) return bad("center of the order-81 group is not <z12>");
    Subgroup wantd = expect(h, k, [](const std::vector<int>& t) { return !t[1] && !t[3]; });
    if (!derived_subgroup(h).same_elements(wantd) || wantd.size() != 9)
      return bad("derived subgroup of the order-81 group is not <xi2> x <z12>");
  }
  {
    const GroupTable& h = build_named("G243");
    CatalogueKey k{CatalogueKey::G243};
    Subgroup wantz = expect(h, k, [](const std::vector<int>& t) { return !t[2] && !t[3] && !t[4]; });
    if (!center(h).same_elements(wantz) || wantz.size() != 9)
      return bad("center of the order-243 group is not <z12> x <z23>");
    Subgroup wantd = expect(h, k, [](const std::vector<int>& t) { return !t[2] && !t[4]; });
    if (!derived_subgroup(h).same_elements(wantd) || wantd.size() != 27)
      return bad("derived subgroup of the order-243 group is not <z12> x <z23> x <eta2>");
  }
  return ok("element-set equality verified");
}

// ---- criterion 4: schur multipliers -----------------------------------------

inline CheckResult multiplier_g20() {
  auto m = schur_multiplier(build_named("G20"));
  return m.invariant_factors == std::vector<long long>{3} ? ok("(3)") : bad(join_inv(m.invariant_factors));
}
inline CheckResult multiplier_g39() {
  auto m = schur_multiplier(build_named("G39"));
  return m.invariant_factors == std::vector<long long>{3, 3} ? ok("(3,3)")
                                                             : bad(join_inv(m.invariant_factors));
}
inline CheckResult multiplier_s4() {
  auto m = schur_multiplier(symmetric_group(4));
  return m.invariant_factors == std::vector<long long>{2} ? ok("(2)") : bad(join_inv(m.invariant_factors));
}
inline CheckResult multiplier_g81() {
  auto m = schur_multiplier(build_named("G81"));
  return m.invariant_factors == std::vector<long long>{3} ? ok("(3)") : bad(join_inv(m.invariant_factors));
}

// ---- criterion 5: representation-group criterion ----------------------------

inline CheckResult repgroup_r54() {
  const GroupTable& h = build_named("R54");
  int z = catalogue_generator(CatalogueKey{CatalogueKey::R54}, "z12");
  auto rep = verify_representation_group(h, subgroup_generated(h, {z}), build_named("G20"));
  return rep.positive() ? ok() : bad("criterion fails");
}
inline CheckResult repgroup_rp54() {
  const GroupTable& h = build_named("RP54");
  Subgroup zeta = center(h);
  if (zeta.size() != 3) return bad("center of the enumerated cover is not of order 3");
  auto rep = verify_representation_group(h, zeta, build_named("G20"));
  return rep.positive() ? ok() : bad("criterion fails");
}
inline CheckResult repgroup_g243() {
  const GroupTable& h = build_named("G243");
  int a = catalogue_generator(CatalogueKey{CatalogueKey::G243}, "z12");
  int b = catalogue_generator(CatalogueKey{CatalogueKey::G243}, "z23");
  auto rep = verify_representation_group(h, subgroup_generated(h, {a, b}), build_named("G39"));
  return rep.positive() ? ok() : bad("criterion fails");
}
inline CheckResult repgroup_negative_g81() {
  const GroupTable& h = build_named("G81");
  int z = catalogue_generator(CatalogueKey{CatalogueKey::G81}, "z12");
  auto rep = verify_representation_group(h, subgroup_generated(h, {z}), build_named("G39"));
  if (rep.positive()) return bad("must fail the multiplier-match clause");
  if (rep.multiplier_match) return bad("multiplier clause unexpectedly passed");
  if (!rep.efficiency.efficient()) return bad("the one-step extension should still be efficient");
  return ok("(3) != (3,3) as required");
}

// ---- criterion 6: one-step witnesses ----------------------------------------

inline ExtensionWitness covering_witness(const char* cover_key, const char* base_key,
                                         const std::vector<int>& keep, const char* xi_name,
                                         const char* eta_name, const char* z_name) {
  CatalogueKey ck = parse_catalogue_key(cover_key);
  CatalogueKey bk = parse_catalogue_key(base_key);
  const GroupTable& cover = build_named(ck);
  const GroupTable& base = build_named(bk);
  const NormalFormScheme& cs = normal_form_scheme(ck);
  const NormalFormScheme& bs = normal_form_scheme(bk);
  ExtensionWitness w;
  w.k = std::make_shared<GroupTable>(cover);
  w.alpha.source = w.k.get();
  w.alpha.target = &base;
  w.alpha.images.resize(cover.order);
  for (int i = 0; i < cover.order; ++i) {
    std::vector<int> t = cs.decode(i), u;
    for (int pos : keep) u.push_back(t[pos]);
    w.alpha.images[i] = bs.encode(u);
  }
  w.xi = catalogue_generator(ck, xi_name);
  w.eta = catalogue_generator(ck, eta_name);
  w.z = catalogue_generator(ck, z_name);
  w.d = cover.element_order(w.z);
  return w;
}

inline CheckResult onestep_r54() {
  ExtensionWitness w = covering_witness("R54", "G20", {1, 2, 3}, "xi1", "xi2", "z12");
  int x = catalogue_generator(CatalogueKey{CatalogueKey::G20}, "x1");
  int y = catalogue_generator(CatalogueKey{CatalogueKey::G20}, "x2");
  return verify_one_step(w, x, y).all_ok() && w.d == 3 ? ok() : bad("witness conditions fail");
}
inline CheckResult onestep_g81() {
  ExtensionWitness w = covering_witness("G81", "G39", {1, 2, 3}, "xi1", "xi2", "z12");
  int x = catalogue_generator(CatalogueKey{CatalogueKey::G39}, "x1");
  int y = catalogue_generator(CatalogueKey{CatalogueKey::G39}, "x2");
  return verify_one_step(w, x, y).all_ok() && w.d == 3 ? ok() : bad("witness conditions fail");
}
inline CheckResult onestep_g243() {
  ExtensionWitness w = covering_witness("G243", "G81", {0, 2, 3, 4}, "eta2", "eta3", "z23");
  int x = catalogue_generator(CatalogueKey{CatalogueKey::G81}, "xi2");
  int y = catalogue_generator(CatalogueKey{CatalogueKey::G81}, "xi3");
  return verify_one_step(w, x, y).all_ok() && w.d == 3 ? ok() : bad("witness conditions fail");
}

// ---- criterion 7: structure isomorphisms ------------------------------------

inline CheckResult structure_g20() {
  GroupTable c3c3 = direct_product(cyclic_group(3), cyclic_group(3));
  GroupTable c2 = cyclic_group(2);
  ActionSpec inv;
  inv.actor = &c2;
  inv.acted = &c3c3;
  inv.apply = [&](int s, int x) { return s ? c3c3.inv(x) : x; };
  GroupTable ref = semidirect_product(c3c3, c2, inv);
  return is_isomorphic(build_named("G20"), ref).has_value() ? ok() : bad("not isomorphic");
}
inline CheckResult structure_g39() {
  GroupTable c3c3 = direct_product(cyclic_group(3), cyclic_group(3));
  GroupTable c3 = cyclic_group(3);
  ActionSpec act;
  act.actor = &c3;
  act.acted = &c3c3;
  act.apply = [&](int k, int x) {
    int i = x / 3, j = x % 3;
    return i * 3 + (j + 2 * k * i) % 3;
  };
  GroupTable ref = semidirect_product(c3c3, c3, act);
  return is_isomorphic(build_named("G39"), ref).has_value() ? ok() : bad("not isomorphic");
}
inline CheckResult structure_identities_g39() {
  const GroupTable& g = build_named("G39");
  CatalogueKey key{CatalogueKey::G39};
  int b = catalogue_generator(key, "x1");
  int c = catalogue_generator(key, "x2");
  int a = catalogue_generator(key, "x3");
  if (g.commutator(b, a) != c) return bad("[b,a] != c");
  if (g.pow(c, 3) != g.identity) return bad("c^3 != 1");
  if (!center(g).same_elements(subgroup_generated(g, {c}))) return bad("Z != <c>");
  int bab = g.conj(b, a);
  if (g.mul(bab, a) != g.mul(a, bab)) return bad("b a b^-1 does not commute with a");
  int aba = g.conj(a, b);
  if (g.mul(aba, b) != g.mul(b, aba)) return bad("a b a^-1 does not commute with b");
  return ok();
}

// ---- criterion 8: the nine variant extensions -------------------------------

inline CheckResult variants_orders_efficiency() {
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      CatalogueKey k{CatalogueKey::G81VAR};
      k.a = a;
      k.b = b;
      const GroupTable& v = build_named(k);
      if (v.order != 81) return bad(k.str() + " has wrong order");
      int z = catalogue_generator(k, "z12");
      if (!is_efficient(v, subgroup_generated(v, {z})).efficient())
        return bad(k.str() + " is not an efficient extension");
    }
  return ok();
}

inline CheckResult variants_partition() {
  std::vector<CatalogueKey> keys;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      CatalogueKey k{CatalogueKey::G81VAR};
      k.a = a;
      k.b = b;
      keys.push_back(k);
    }
  std::vector<int> cls(9, -1);
  int nclasses = 0;
  for (int i = 0; i < 9; ++i) {
    if (cls[i] >= 0) continue;
    cls[i] = nclasses++;
    for (int j = i + 1; j < 9; ++j)
      if (cls[j] < 0 && is_isomorphic(build_named(keys[i]), build_named(keys[j])).has_value())
        cls[j] = cls[i];
  }
  std::ostringstream os;
  os << nclasses << " isomorphism classes:";
  for (int c = 0; c < nclasses; ++c) {
    os << " {";
    bool first = true;
    for (int i = 0; i < 9; ++i)
      if (cls[i] == c) {
        if (!first) os << " ";
        os << "(" << keys[i].a << "," << keys[i].b << ")";
        first = false;
      }
    os << "}";
  }
  return ok(os.str());
}

// ---- criterion 9: characters and spin types ----------------------------------

inline CheckResult characters_degree_sums() {
  std::vector<std::string> keys{"G20", "R54", "RP54", "G39", "G81", "G243", "TPRIME(4)"};
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      keys.push_back("G81VAR(" + std::to_string(a) + "," + std::to_string(b) + ")");
  for (const std::string& key : keys) {
    const GroupTable& g = build_named(key);
    CharacterTable t = character_table(g);
    long long s = 0;
    for (int d : t.degrees) s += (long long)d * d;
    if (s != g.order) return bad(key + ": degree squares sum to " + std::to_string(s));
  }
  return ok();
}

inline CheckResult spin_types_r54() {
  const GroupTable& h = build_named("R54");
  int z = catalogue_generator(CatalogueKey{CatalogueKey::R54}, "z12");
  CharacterTable t = character_table(h);
  SpinTypePartition part = spin_types(h, subgroup_generated(h, {z}), &t);
  if (part.types.size() != 3) return bad("expected 3 spin types");
  for (const auto& ty : part.types) {
    long long s = 0;
    for (int d : ty.degrees) s += (long long)d * d;
    if (s != 18) return bad("type square-sum " + std::to_string(s));
    for (long long v : ty.tau)
      if ((3 * v) % t.e != 0) return bad("central character is not a cube root");
  }
  return ok("3 types, each of square-sum 18, cube-root central characters");
}

inline CheckResult spin_types_g243() {
  const GroupTable& h = build_named("G243");
  int a = catalogue_generator(CatalogueKey{CatalogueKey::G243}, "z12");
  int b = catalogue_generator(CatalogueKey{CatalogueKey::G243}, "z23");
  CharacterTable t = character_table(h);
  SpinTypePartition part = spin_types(h, subgroup_generated(h, {a, b}), &t);
  if (part.types.size() != 9) return bad("expected 9 spin types");
  for (const auto& ty : part.types) {
    long long s = 0;
    for (int d : ty.degrees) s += (long long)d * d;
    if (s != 27) return bad("type square-sum " + std::to_string(s));
  }
  return ok("9 types, each of square-sum 27");
}

inline CheckResult degrees_g39() {
  std::vector<int> d = irrep_degrees(build_named("G39"));
  return d == std::vector<int>{1, 1, 1, 1, 1, 1, 1, 1, 1, 3, 3} ? ok("{1^9, 3^2}")
                                                                : bad("unexpected degrees");
}

inline CheckResult degrees_54_flags() {
  std::vector<int> d1 = irrep_degrees(build_named("R54"));
  std::vector<int> d2 = irrep_degrees(build_named("RP54"));
  bool has3_1 = std::find(d1.begin(), d1.end(), 3) != d1.end();
  bool has3_2 = std::find(d2.begin(), d2.end(), 3) != d2.end();
  bool iso = is_isomorphic(build_named("R54"), build_named("RP54")).has_value();
  std::ostringstream os;
  os << "dimension-3 flags: closed-form " << (has3_1 ? "yes" : "no") << ", enumerated "
     << (has3_2 ? "yes" : "no") << "; isomorphic: " << (iso ? "yes" : "no");
  if (iso && has3_1 != has3_2) return bad("isomorphic groups with different flags");
  if (!iso && has3_1 == has3_2) return bad("non-isomorphic covers must differ in the flag");
  return ok(os.str());
}

// ---- criterion 10: stairway search -------------------------------------------

inline CheckResult stairway_g20() {
  const GroupTable& g = build_named("G20");
  auto hits = stairway_search(g, 3);
  for (const auto& hit : hits) {
    Subgroup z = subgroup_generated(*hit.witness.k, {hit.witness.z});
    if (verify_representation_group(*hit.witness.k, z, g).positive())
      return ok(std::to_string(hits.size()) + " extension types; a representation group is among them");
  }
  return bad("no hit passes the representation-group criterion");
}

inline CheckResult stairway_g39() {
  const GroupTable& g = build_named("G39");
  auto hits = stairway_search(g, 3);
  for (const auto& hit : hits)
    if (is_isomorphic(*hit.witness.k, build_named("G81")).has_value())
      return ok(std::to_string(hits.size()) + " extension types; the order-81 extension is among them");
  return bad("the order-81 extension is missing");
}

// ---- criterion 11: property suites --------------------------------------------

inline CheckResult commutator_power_property() {
  std::vector<std::string> keys{"G20", "R54", "RP54", "G39", "G81", "G243", "TPRIME(4)"};
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      keys.push_back("G81VAR(" + std::to_string(a) + "," + std::to_string(b) + ")");
  for (const std::string& key : keys) {
    const GroupTable& g = build_named(key);
    for (int x = 0; x < g.order; ++x)
      for (int y = 0; y < g.order; ++y) {
        int z = g.commutator(x, y);
        if (g.mul(z, x) != g.mul(x, z) || g.mul(z, y) != g.mul(y, z)) continue;
        int ox = g.element_order(x), oy = g.element_order(y);
        int zx = g.identity;  // z^{m n} tracked incrementally
        for (int mm = 1; mm <= ox; ++mm) {
          zx = g.mul(zx, z);
          int zxy = g.identity;
          int xm = g.pow(x, mm);
          for (int nn = 1; nn <= oy; ++nn) {
            zxy = g.mul(zxy, zx);
            if (g.commutator(xm, g.pow(y, nn)) != zxy)
              return bad(key + ": identity fails at (" + std::to_string(x) + "," + std::to_string(y) +
                         ")");
          }
        }
      }
  }
  return ok("all qualifying pairs in all catalogue groups");
}

inline CheckResult quotient_property() {
  const GroupTable& r54 = build_named("R54");
  int z = catalogue_generator(CatalogueKey{CatalogueKey::R54}, "z12");
  QuotientResult q1 = quotient(r54, subgroup_generated(r54, {z}));
  if (!verify_homomorphism(q1.projection)) return bad("projection is not a homomorphism");
  if (!kernel(q1.projection).same_elements(subgroup_generated(r54, {z})))
    return bad("kernel is not the quotient subgroup");
  if (!is_isomorphic(*q1.group, build_named("G20"))) return bad("54/3 quotient is wrong");
  const GroupTable& g243 = build_named("G243");
  int a = catalogue_generator(CatalogueKey{CatalogueKey::G243}, "z12");
  int b = catalogue_generator(CatalogueKey{CatalogueKey::G243}, "z23");
  QuotientResult q2 = quotient(g243, subgroup_generated(g243, {a, b}));
  if (!is_isomorphic(*q2.group, build_named("G39"))) return bad("243/9 quotient is wrong");
  return ok();
}

inline CheckResult cocycle_coboundary_property() {
  std::vector<GroupTable> bases;
  bases.push_back(direct_product(cyclic_group(2), cyclic_group(2)));
  bases.push_back(cyclic_group(3));
  bases.push_back(symmetric_group(3));
  std::vector<uint32_t> mods{2, 3, 2};
  for (size_t i = 0; i < bases.size(); ++i) {
    const GroupTable& g = bases[i];
    uint32_t m = mods[i];
    H2Result h2 = h2_trivial_coefficients(g, m);
    CocycleTable f = h2.generators.empty()
                         ? CocycleTable{g.order, m, std::vector<uint32_t>(size_t(g.order) * g.order, 0)}
                         : h2.generators[0];
    CocycleTable fb = f;
    int e = (g.identity + 1) % g.order;
    for (int x = 0; x < g.order; ++x)
      for (int y = 0; y < g.order; ++y) {
        long long t = (x == e) + (y == e) - (g.mul(x, y) == e);
        fb.at(x, y) = uint32_t(mod_floor((long long)fb.at(x, y) + t, m));
      }
    CentralExtensionResult e1 = extension_from_cocycle(g, m, f);
    CentralExtensionResult e2 = extension_from_cocycle(g, m, fb);
    if (!is_isomorphic(*e1.ext, *e2.ext)) return bad("cohomologous cocycles gave different extensions");
  }
  return ok();
}

}  // namespace checks

inline const std::vector<Check>& verification_checks() {
  using namespace checks;
  static const std::vector<Check> all = {
      {"orders", "catalogue groups have the documented orders and pass full axiom sweeps", 1, false,
       catalogue_orders},
      {"cross-construction", "normal-form tables agree with coset enumeration under the generator map",
       2, false, cross_constructions},
      {"centers-derived", "centers and derived subgroups match the claimed element sets", 3, false,
       centers_and_derived},
      {"multiplier-g20", "multiplier of the order-18 group is (3)", 4, false, multiplier_g20},
      {"multiplier-g39", "multiplier of the order-27 group is (3,3)", 4, false, multiplier_g39},
      {"multiplier-s4", "multiplier of the symmetric group on 4 letters is (2)", 4, false, multiplier_s4},
      {"multiplier-g81", "multiplier of the order-81 group is (3)", 4, true, multiplier_g81},
      {"repgroup-54", "the closed-form order-54 cover is a representation group", 5, false, repgroup_r54},
      {"repgroup-54-enumerated", "the enumerated order-54 cover is a representation group", 5, false,
       repgroup_rp54},
      {"repgroup-243", "the order-243 group is a representation group of the order-27 group", 5, false,
       repgroup_g243},
      {"repgroup-81-negative", "the order-81 step fails the multiplier-match clause", 5, false,
       repgroup_negative_g81},
      {"onestep-54", "one-step witness for the order-54 cover", 6, false, onestep_r54},
      {"onestep-81", "one-step witness for the order-81 extension", 6, false, onestep_g81},
      {"onestep-243", "one-step witness for the order-243 extension", 6, false, onestep_g243},
      {"structure-18", "the order-18 group is the inversion semidirect product", 7, false, structure_g20},
      {"structure-27", "the order-27 group is the Heisenberg-type semidirect product", 7, false,
       structure_g39},
      {"structure-identities", "commutator identities of the order-27 presentation hold elementwise", 7,
       false, structure_identities_g39},
      {"variants-efficient", "all nine variant extensions have order 81 and are efficient", 8, false,
       variants_orders_efficiency},
      {"variants-partition", "isomorphism partition of the nine variants", 8, false, variants_partition},
      {"characters-degree-sums", "degree squares sum to the group order on every catalogue table", 9,
       false, characters_degree_sums},
      {"spin-54", "three spin types of square-sum 18 with cube-root central characters", 9, false,
       spin_types_r54},
      {"spin-243", "nine spin types of square-sum 27", 9, false, spin_types_g243},
      {"degrees-27", "irreducible degrees of the order-27 group are {1^9, 3^2}", 9, false, degrees_g39},
      {"degrees-54-flags", "dimension-3 flags of the two order-54 covers are reported", 9, false,
       degrees_54_flags},
      {"stairway-18", "stairway search over the order-18 group reaches a representation group", 10, false,
       stairway_g20},
      {"stairway-27", "stairway search over the order-27 group reaches the order-81 extension", 10, false,
       stairway_g39},
      {"property-commutator-power", "commutator power identity over all qualifying pairs", 11, false,
       commutator_power_property},
      {"property-quotients", "cover quotients reproduce the base groups", 11, false, quotient_property},
      {"property-cocycle-coboundary", "cohomologous cocycles give isomorphic extensions", 11, false,
       cocycle_coboundary_property},
  };
  return all;
}

inline VerificationSuiteReport run_verification(const std::vector<std::string>& names,
                                                bool include_slow) {
  VerificationSuiteReport rep;
  for (const Check& c : verification_checks()) {
    if (!names.empty() &&
        std::find(names.begin(), names.end(), c.name) == names.end())
      continue;
    SuiteEntry e;
    e.name = c.name;
    e.claim = c.claim;
    e.criterion = c.criterion;
    if (c.slow && !include_slow && names.empty()) {
      e.skipped = true;
      rep.entries.push_back(std::move(e));
      continue;
    }
    auto t0 = std::chrono::steady_clock::now();
    try {
      CheckResult r = c.run();
      e.pass = r.pass;
      e.detail = r.detail;
    } catch (const std::exception& ex) {
      e.pass = false;
      e.detail = std::string("exception: ") + ex.what();
    }
    e.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    if (!e.pass) rep.all_pass = false;
    rep.entries.push_back(std::move(e));
  }
  if (rep.entries.empty()) fail("no verification checks matched the requested names");
  return rep;
}

}  // namespace fgx
