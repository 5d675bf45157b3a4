// Catalogue of built-in groups: closed-form and collection product rules
// on normal-form tuples, matching presentations, and cross-checked
// construction of the Cayley tables.
#pragma once

#include <array>
#include <cstdlib>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "group_table.hpp"
#include "presentation.hpp"
#include "structure.hpp"
#include "todd_coxeter.hpp"

namespace fgx {

// A group element written as an ordered product of generator powers,
// stored as one residue per position.
struct NormalFormTuple {
  std::string key;
  std::vector<int> params;

  bool operator==(const NormalFormTuple& o) const { return key == o.key && params == o.params; }
};

struct CatalogueKey {
  enum Kind { G20, R54, RP54, G39, G81, G81VAR, G243, TPRIME } kind;
  int a = 0, b = 0;  // G81VAR parameters
  int n = 0;         // TPRIME parameter

  std::string str() const {
    switch (kind) {
      case G20: return "G20";
      case R54: return "R54";
      case RP54: return "RP54";
      case G39: return "G39";
      case G81: return "G81";
      case G81VAR: return "G81VAR(" + std::to_string(a) + "," + std::to_string(b) + ")";
      case G243: return "G243";
      case TPRIME: return "TPRIME(" + std::to_string(n) + ")";
    }
    return "?";
  }
};

inline CatalogueKey parse_catalogue_key(const std::string& text, int n_for_tprime = 4) {
  auto starts = [&](const char* p) { return text.rfind(p, 0) == 0; };
  if (text == "G20") return {CatalogueKey::G20};
  if (text == "R54") return {CatalogueKey::R54};
  if (text == "RP54") return {CatalogueKey::RP54};
  if (text == "G39") return {CatalogueKey::G39};
  if (text == "G81") return {CatalogueKey::G81};
  if (text == "G243") return {CatalogueKey::G243};
  if (starts("G81VAR")) {
    int a, b;
    if (std::sscanf(text.c_str(), "G81VAR(%d,%d)", &a, &b) != 2)
      fail("cannot parse variant key '" + text + "'; expected G81VAR(a,b)");
    CatalogueKey k{CatalogueKey::G81VAR};
    k.a = a;
    k.b = b;
    if (a < 0 || a > 2 || b < 0 || b > 2) fail("G81VAR parameters must lie in 0..2");
    return k;
  }
  if (starts("TPRIME")) {
    CatalogueKey k{CatalogueKey::TPRIME};
    k.n = n_for_tprime;
    if (text != "TPRIME" && std::sscanf(text.c_str(), "TPRIME(%d)", &k.n) != 1)
      fail("cannot parse key '" + text + "'; expected TPRIME or TPRIME(n)");
    if (k.n < 3 || k.n > 5) fail("TPRIME requires 3 <= n <= 5");
    return k;
  }
  fail("unknown catalogue key '" + text + "'");
}

inline const std::vector<std::string>& catalogue_key_names() {
  static const std::vector<std::string> names = {"G20", "R54", "RP54", "G39", "G81",
                                                 "G81VAR(a,b)", "G243", "TPRIME(n)"};
  return names;
}

namespace detail {

inline int m3(int v) { return ((v % 3) + 3) % 3; }

// phi-conjugation table for the order-81 family: conjugating xi1^g1p by
// xi3^g3 yields z^e * xi1^g1p * xi2^f2.
inline void phi81(int g3, int g1p, int& e, int& f2) {
  e = 0;
  f2 = 0;
  if (g3 == 0 || g1p == 0) return;
  if (g3 == 1 && g1p == 1) { e = 1; f2 = 2; }
  if (g3 == 2 && g1p == 1) { e = 2; f2 = 1; }
  if (g3 == 1 && g1p == 2) { e = 0; f2 = 1; }
  if (g3 == 2 && g1p == 2) { e = 0; f2 = 2; }
}

// order-243 tables: conjugation by eta3^g3 of eta1^g1p gives
// z12^e1 z23^e2 eta1^g1p eta2^f2, and of eta2^g2p gives z23^c eta2^g2p.
inline void phi243_eta1(int g3, int g1p, int& e1, int& e2, int& f2) {
  e1 = e2 = f2 = 0;
  if (g3 == 0 || g1p == 0) return;
  if (g3 == 1 && g1p == 1) { e1 = 1; e2 = 0; f2 = 2; }
  if (g3 == 1 && g1p == 2) { e1 = 0; e2 = 0; f2 = 1; }
  if (g3 == 2 && g1p == 1) { e1 = 2; e2 = 1; f2 = 1; }
  if (g3 == 2 && g1p == 2) { e1 = 0; e2 = 2; f2 = 2; }
}

inline int phi243_eta2(int g3, int g2p) {
  if (g3 == 0 || g2p == 0) return 0;
  if (g3 == 1 && g2p == 1) return 2;
  if (g3 == 1 && g2p == 2) return 1;
  if (g3 == 2 && g2p == 1) return 1;
  return 2;  // g3 == 2 && g2p == 2
}

}  // namespace detail

// Static description of one catalogue entry with a normal-form rule.
struct NormalFormScheme {
  std::vector<int> moduli;            // per-position modulus, most significant first
  std::vector<std::string> names;     // parameter names for display
  int order() const {
    int o = 1;
    for (int m : moduli) o *= m;
    return o;
  }
  int encode(const std::vector<int>& t) const {
    int v = 0;
    for (size_t i = 0; i < moduli.size(); ++i) {
      if (t[i] < 0 || t[i] >= moduli[i]) fail("normal-form residue out of range");
      v = v * moduli[i] + t[i];
    }
    return v;
  }
  std::vector<int> decode(int v) const {
    std::vector<int> t(moduli.size());
    for (size_t i = moduli.size(); i-- > 0;) {
      t[i] = v % moduli[i];
      v /= moduli[i];
    }
    return t;
  }
  std::string render(const std::vector<int>& t) const {
    std::string s = "(";
    for (size_t i = 0; i < t.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(t[i]);
    }
    return s + ")";
  }
};

inline const NormalFormScheme& normal_form_scheme(const CatalogueKey& key) {
  static const NormalFormScheme g20{{3, 3, 2}, {"gamma1", "gamma2", "sigma"}};
  static const NormalFormScheme r54{{3, 3, 3, 2}, {"beta", "gamma1", "gamma2", "sigma"}};
  static const NormalFormScheme g39{{3, 3, 3}, {"gamma1", "gamma2", "gamma3"}};
  static const NormalFormScheme g81{{3, 3, 3, 3}, {"beta", "gamma1", "gamma2", "gamma3"}};
  static const NormalFormScheme g243{{3, 3, 3, 3, 3}, {"beta1", "beta2", "gamma1", "gamma2", "gamma3"}};
  switch (key.kind) {
    case CatalogueKey::G20: return g20;
    case CatalogueKey::R54: return r54;
    case CatalogueKey::G39: return g39;
    case CatalogueKey::G81:
    case CatalogueKey::G81VAR: return g81;
    case CatalogueKey::G243: return g243;
    default: fail("catalogue key " + key.str() + " has no normal-form rule");
  }
}

// The product of two normal-form tuples, computed by the closed-form rule
// (G20, R54) or by collection through the conjugation tables (G39 family).
inline std::vector<int> product_params(const CatalogueKey& key, const std::vector<int>& s,
                                       const std::vector<int>& t) {
  using detail::m3;
  switch (key.kind) {
    case CatalogueKey::R54: {
      int sign = s[3] ? -1 : 1;
      return {m3(s[0] + t[0] - s[2] * sign * t[1]), m3(s[1] + sign * t[1]), m3(s[2] + sign * t[2]),
              (s[3] + t[3]) & 1};
    }
    case CatalogueKey::G20: {
      int sign = s[2] ? -1 : 1;
      return {m3(s[0] + sign * t[0]), m3(s[1] + sign * t[1]), (s[2] + t[2]) & 1};
    }
    case CatalogueKey::G39: {
      int e, f2;
      detail::phi81(s[2], t[0], e, f2);
      return {m3(s[0] + t[0]), m3(s[1] + f2 + t[1]), m3(s[2] + t[2])};
    }
    case CatalogueKey::G81:
    case CatalogueKey::G81VAR: {
      int e, f2;
      detail::phi81(s[3], t[1], e, f2);
      int s1 = s[1] + t[1], s3 = s[3] + t[3];
      int beta = s[0] + t[0] + e - s[2] * t[1] + key.a * (s1 / 3) + key.b * (s3 / 3);
      return {m3(beta), s1 % 3, m3(s[2] + f2 + t[2]), s3 % 3};
    }
    case CatalogueKey::G243: {
      int e1, e2, f2;
      detail::phi243_eta1(s[4], t[2], e1, e2, f2);
      int c = detail::phi243_eta2(s[4], t[3]);
      return {m3(s[0] + t[0] + e1 - s[3] * t[2]), m3(s[1] + t[1] + e2 + c), m3(s[2] + t[2]),
              m3(s[3] + f2 + t[3]), m3(s[4] + t[4])};
    }
    default: fail("catalogue key " + key.str() + " has no normal-form rule");
  }
}

inline NormalFormTuple product_normal_form(const CatalogueKey& key, const NormalFormTuple& t1,
                                           const NormalFormTuple& t2) {
  const NormalFormScheme& sc = normal_form_scheme(key);
  if (t1.params.size() != sc.moduli.size() || t2.params.size() != sc.moduli.size())
    fail("tuple arity does not match the rule for " + key.str());
  for (size_t i = 0; i < sc.moduli.size(); ++i)
    if (t1.params[i] < 0 || t1.params[i] >= sc.moduli[i] || t2.params[i] < 0 ||
        t2.params[i] >= sc.moduli[i])
      fail("tuple residue out of range for " + key.str());
  return {key.str(), product_params(key, t1.params, t2.params)};
}

// Presentation of each catalogue group, with generators listed in the
// normal-form order so tuples translate directly into generator words.
inline Presentation catalogue_presentation(const CatalogueKey& key) {
  switch (key.kind) {
    case CatalogueKey::G20:
      return make_presentation({"x1", "x2", "w"},
                               {"x1^3", "x2^3", "w^2", "x1*x2*x1^-1*x2^-1", "(w*x1)^2", "(w*x2)^2"});
    case CatalogueKey::R54:
      return make_presentation(
          {"z12", "xi1", "xi2", "w"},
          {"z12^3", "xi1^3", "xi2^3", "w^2", "xi1*xi2*xi1^-1*xi2^-1*z12^-1", "(w*xi1)^2", "(w*xi2)^2"},
          {"z12"});
    case CatalogueKey::G39:
      return make_presentation({"x1", "x2", "x3"}, {"x1^3", "x2^3", "x3^3", "x1*x3*x1^-1*x3^-1*x2^-1"},
                               {"x2"});
    case CatalogueKey::G81:
    case CatalogueKey::G81VAR: {
      auto pw = [](const char* g, int e) {
        std::string s(g);
        s += "^3";
        if (e) s += "*z12^-" + std::to_string(e);
        return s;
      };
      return make_presentation({"z12", "xi1", "xi2", "xi3"},
                               {"z12^3", pw("xi1", key.a), "xi2^3", pw("xi3", key.b),
                                "xi1*xi2*xi1^-1*xi2^-1*z12^-1", "xi1*xi3*xi1^-1*xi3^-1*xi2^-1",
                                "xi2*xi3*xi2^-1*xi3^-1"},
                               {"z12"});
    }
    case CatalogueKey::G243:
      return make_presentation(
          {"z12", "z23", "eta1", "eta2", "eta3"},
          {"z12^3", "z23^3", "eta1^3", "eta2^3", "eta3^3",
           "eta1*eta2*eta1^-1*eta2^-1*z12^-1", "eta2*eta3*eta2^-1*eta3^-1*z23^-1",
           // conjugation rules of eta1 and eta1^2 by eta3 and eta3^2
           "eta3*eta1*eta3^-1*(z12*eta1*eta2^2)^-1", "eta3*eta1^2*eta3^-1*(eta1^2*eta2)^-1",
           "eta3^2*eta1*eta3^-2*(z12^2*z23*eta1*eta2)^-1",
           "eta3^2*eta1^2*eta3^-2*(z23^2*eta1^2*eta2^2)^-1",
           // conjugation rules of eta2 and eta2^2 by eta3 and eta3^2
           "eta3*eta2*eta3^-1*(z23^2*eta2)^-1", "eta3*eta2^2*eta3^-1*(z23*eta2^2)^-1",
           "eta3^2*eta2*eta3^-2*(z23*eta2)^-1", "eta3^2*eta2^2*eta3^-2*(z23^2*eta2^2)^-1"},
          {"z12", "z23"});
    case CatalogueKey::RP54:
      return make_presentation(
          {"eta1", "eta2", "eta3", "zeta"},
          {"eta1^2", "eta2^2", "eta3^2", "(eta1*eta2*eta3)^2*zeta^-1", "zeta^3", "(eta1*eta2)^3",
           "(eta1*eta3)^3"},
          {"zeta"});
    case CatalogueKey::TPRIME: {
      int n = key.n;
      std::vector<std::string> gens;
      for (int i = 1; i < n; ++i) gens.push_back("eta" + std::to_string(i));
      gens.push_back("zeta");
      std::vector<std::string> rels;
      for (int i = 1; i < n; ++i) rels.push_back("eta" + std::to_string(i) + "^2");
      for (int i = 1; i + 1 < n; ++i)
        rels.push_back("(eta" + std::to_string(i) + "*eta" + std::to_string(i + 1) + ")^3");
      rels.push_back("zeta^2");
      for (int i = 1; i < n; ++i)
        for (int k = i + 2; k < n; ++k)
          rels.push_back("(eta" + std::to_string(i) + "*eta" + std::to_string(k) + ")^2*zeta^-1");
      return make_presentation(gens, rels, {"zeta"});
    }
  }
  fail("unhandled catalogue key");
}

inline int catalogue_expected_order(const CatalogueKey& key) {
  switch (key.kind) {
    case CatalogueKey::G20: return 18;
    case CatalogueKey::R54:
    case CatalogueKey::RP54: return 54;
    case CatalogueKey::G39: return 27;
    case CatalogueKey::G81:
    case CatalogueKey::G81VAR: return 81;
    case CatalogueKey::G243: return 243;
    case CatalogueKey::TPRIME: {
      long long f = 1;
      for (int i = 2; i <= key.n; ++i) f *= i;
      return int(2 * f);  // n = 3 still enumerates to 12, but is not efficient
    }
  }
  fail("unhandled catalogue key");
}

inline int default_coset_cap(int expected_order) {
  if (const char* env = std::getenv("FGX_MAX_COSETS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 10 * expected_order;
}

namespace detail {

inline GroupTable build_from_normal_form(const CatalogueKey& key) {
  const NormalFormScheme& sc = normal_form_scheme(key);
  int n = sc.order();
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = sc.render(sc.decode(i));
  return make_group(n,
                    [&](int i, int j) { return sc.encode(product_params(key, sc.decode(i), sc.decode(j))); },
                    std::move(labels));
}

// The tuple -> coset bijection sends a tuple to the product of the
// corresponding generator powers evaluated in the enumerated table; the
// two constructions must agree on all products.
inline void cross_check_constructions(const CatalogueKey& key, const GroupTable& nf,
                                      const CosetResult& tc) {
  if (tc.group.order != nf.order)
    fail(key.str() + ": enumerated order " + std::to_string(tc.group.order) +
         " != normal-form order " + std::to_string(nf.order));
  const NormalFormScheme& sc = normal_form_scheme(key);
  std::vector<int> phi(nf.order);
  std::vector<char> hit(nf.order, 0);
  for (int i = 0; i < nf.order; ++i) {
    std::vector<int> t = sc.decode(i);
    int e = tc.group.identity;
    for (size_t p = 0; p < t.size(); ++p)
      for (int c = 0; c < t[p]; ++c) e = tc.group.mul(e, tc.generator_elements[p]);
    phi[i] = e;
    if (hit[e]) fail(key.str() + ": generator-word map is not a bijection");
    hit[e] = 1;
  }
  for (int i = 0; i < nf.order; ++i)
    for (int j = 0; j < nf.order; ++j)
      if (phi[nf.mul(i, j)] != tc.group.mul(phi[i], phi[j]))
        fail(key.str() + ": normal-form rule disagrees with coset enumeration at (" +
             std::to_string(i) + "," + std::to_string(j) + ")");
}

}  // namespace detail

// Re-runs the normal-form versus coset-enumeration comparison from scratch
// for a key with a product rule; throws on any mismatch.
inline void cross_check_catalogue(const CatalogueKey& key) {
  GroupTable nf = detail::build_from_normal_form(key);
  CosetResult tc = todd_coxeter_with_generators(catalogue_presentation(key),
                                                default_coset_cap(catalogue_expected_order(key)));
  detail::cross_check_constructions(key, nf, tc);
}

// Builds a catalogue group, verifies the group axioms by brute force, and
// cross-checks the normal-form rule against coset enumeration of the
// matching presentation. Results are cached per key.
inline const GroupTable& build_named(const CatalogueKey& key) {
  static std::map<std::string, GroupTable> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(key.str());
  if (it != cache.end()) return it->second;

  int expected = catalogue_expected_order(key);
  GroupTable g;
  bool has_normal_form =
      key.kind != CatalogueKey::RP54 && key.kind != CatalogueKey::TPRIME;
  CosetResult tc = todd_coxeter_with_generators(catalogue_presentation(key),
                                                default_coset_cap(expected));
  if (has_normal_form) {
    g = detail::build_from_normal_form(key);
    detail::cross_check_constructions(key, g, tc);
  } else {
    g = std::move(tc.group);
    if (key.kind != CatalogueKey::TPRIME || key.n >= 4) {
      if (g.order != expected)
        fail(key.str() + ": enumeration yields order " + std::to_string(g.order) + ", expected " +
             std::to_string(expected));
    }
  }
  AxiomReport rep = verify_axioms(g);
  if (!rep.all_ok()) fail(key.str() + ": axiom verification failed: " + rep.detail);
  return cache.emplace(key.str(), std::move(g)).first->second;
}

inline const GroupTable& build_named(const std::string& key_text) {
  return build_named(parse_catalogue_key(key_text));
}

// Index of the element a named generator maps to in a normal-form table.
inline int catalogue_generator(const CatalogueKey& key, const std::string& gen) {
  const NormalFormScheme& sc = normal_form_scheme(key);
  Presentation p = catalogue_presentation(key);
  int gi = p.gen_index(gen);
  std::vector<int> t(sc.moduli.size(), 0);
  t[gi] = 1;
  return sc.encode(t);
}

}  // namespace fgx
