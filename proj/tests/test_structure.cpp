#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fgx/catalogue.hpp>
#include <fgx/isomorphism.hpp>
#include <fgx/structure.hpp>

using namespace fgx;

namespace {

GroupTable inversion_semidirect_18() {
  static GroupTable c3c3 = direct_product(cyclic_group(3), cyclic_group(3));
  static GroupTable c2 = cyclic_group(2);
  ActionSpec a;
  a.actor = &c2;
  a.acted = &c3c3;
  a.apply = [&](int s, int x) { return s ? c3c3.inv(x) : x; };
  return semidirect_product(c3c3, c2, a);
}

GroupTable heisenberg_27() {
  static GroupTable c3c3 = direct_product(cyclic_group(3), cyclic_group(3));
  static GroupTable c3 = cyclic_group(3);
  ActionSpec a;
  a.actor = &c3;
  a.acted = &c3c3;
  // generator of the acting C3 sends (i,j) to (i, j+2i); the inner pair is
  // <x1> x <x2> with x2 shifted by the conjugation rule
  a.apply = [&](int k, int x) {
    int i = x / 3, j = x % 3;
    return i * 3 + (j + 2 * k * i) % 3;
  };
  return semidirect_product(c3c3, c3, a);
}

}  // namespace

TEST_CASE("center of the catalogue covers") {
  const GroupTable& r54 = build_named("R54");
  Subgroup z = center(r54);
  CHECK(z.size() == 3);
  int z12 = catalogue_generator(CatalogueKey{CatalogueKey::R54}, "z12");
  CHECK(z.same_elements(subgroup_generated(r54, {z12})));

  const GroupTable& g243 = build_named("G243");
  Subgroup z243 = center(g243);
  CHECK(z243.size() == 9);
  int a = catalogue_generator(CatalogueKey{CatalogueKey::G243}, "z12");
  int b = catalogue_generator(CatalogueKey{CatalogueKey::G243}, "z23");
  CHECK(z243.same_elements(subgroup_generated(g243, {a, b})));

  GroupTable c12 = cyclic_group(12);
  CHECK(center(c12).size() == 12);
}

TEST_CASE("derived subgroups of the catalogue groups") {
  const GroupTable& g81 = build_named("G81");
  Subgroup d81 = derived_subgroup(g81);
  CHECK(d81.size() == 9);
  int z12 = catalogue_generator(CatalogueKey{CatalogueKey::G81}, "z12");
  int xi2 = catalogue_generator(CatalogueKey{CatalogueKey::G81}, "xi2");
  CHECK(d81.same_elements(subgroup_generated(g81, {z12, xi2})));

  const GroupTable& g243 = build_named("G243");
  CHECK(derived_subgroup(g243).size() == 27);

  GroupTable c3c3 = direct_product(cyclic_group(3), cyclic_group(3));
  CHECK(derived_subgroup(c3c3).size() == 1);
}

TEST_CASE("conjugacy classes, orders, exponent") {
  const GroupTable& g39 = build_named("G39");
  auto classes = conjugacy_classes(g39);
  CHECK(classes.size() == 11);
  for (auto& c : classes) CHECK(27 % c.size() == 0);
  CHECK(exponent(g39) == 3);

  GroupTable c2 = cyclic_group(2);
  auto hist = element_orders(c2);
  CHECK(hist[1] == 1);
  CHECK(hist[2] == 1);
}

TEST_CASE("quotients reproduce the base of each cover") {
  const GroupTable& r54 = build_named("R54");
  int z12 = catalogue_generator(CatalogueKey{CatalogueKey::R54}, "z12");
  QuotientResult q = quotient(r54, subgroup_generated(r54, {z12}));
  CHECK(q.group->order == 18);
  CHECK(verify_homomorphism(q.projection));
  CHECK(kernel(q.projection).size() == 3);
  CHECK(is_isomorphic(*q.group, build_named("G20")).has_value());

  const GroupTable& g243 = build_named("G243");
  int a = catalogue_generator(CatalogueKey{CatalogueKey::G243}, "z12");
  int b = catalogue_generator(CatalogueKey{CatalogueKey::G243}, "z23");
  QuotientResult q2 = quotient(g243, subgroup_generated(g243, {a, b}));
  CHECK(q2.group->order == 27);
  CHECK(is_isomorphic(*q2.group, build_named("G39")).has_value());

  // quotient by the trivial subgroup is the group itself
  QuotientResult q3 = quotient(r54, trivial_subgroup(r54));
  CHECK(q3.group->order == 54);
  CHECK(is_bijective(q3.projection));

  // non-normal subgroups are rejected
  GroupTable s3 = symmetric_group(3);
  int transposition = -1;
  for (int x = 0; x < 6; ++x)
    if (s3.element_order(x) == 2) { transposition = x; break; }
  CHECK_THROWS_AS(quotient(s3, subgroup_generated(s3, {transposition})), error);
}

TEST_CASE("commutators match the presentation data") {
  const GroupTable& g39 = build_named("G39");
  CatalogueKey key{CatalogueKey::G39};
  int x1 = catalogue_generator(key, "x1");
  int x2 = catalogue_generator(key, "x2");
  int x3 = catalogue_generator(key, "x3");
  CHECK(commutator(g39, x1, x3) == x2);

  const GroupTable& r54 = build_named("R54");
  CatalogueKey rkey{CatalogueKey::R54};
  CHECK(commutator(r54, catalogue_generator(rkey, "xi1"), catalogue_generator(rkey, "xi2")) ==
        catalogue_generator(rkey, "z12"));
}

TEST_CASE("heisenberg-type identities in the order-27 group") {
  const GroupTable& g = build_named("G39");
  CatalogueKey key{CatalogueKey::G39};
  int b = catalogue_generator(key, "x1");   // x1 = b
  int c = catalogue_generator(key, "x2");   // x2 = [b, a]
  int a = catalogue_generator(key, "x3");   // x3 = a
  CHECK(g.commutator(b, a) == c);
  CHECK(g.pow(c, 3) == g.identity);
  CHECK(center(g).same_elements(subgroup_generated(g, {c})));
  int bab = g.conj(b, a);  // b a b^-1
  CHECK(g.mul(bab, a) == g.mul(a, bab));
  int aba = g.conj(a, b);  // a b a^-1
  CHECK(g.mul(aba, b) == g.mul(b, aba));
}

TEST_CASE("abelian invariants") {
  CHECK(abelian_invariants(direct_product(cyclic_group(3), cyclic_group(3))) ==
        std::vector<long long>{3, 3});
  CHECK(abelian_invariants(cyclic_group(12)) == std::vector<long long>{12});
  CHECK(abelian_invariants(direct_product(cyclic_group(2), cyclic_group(6))) ==
        std::vector<long long>{2, 6});
  CHECK(abelian_invariants(direct_product(cyclic_group(4), cyclic_group(6))) ==
        std::vector<long long>{2, 12});
  CHECK_THROWS_AS(abelian_invariants(symmetric_group(3)), error);
}

TEST_CASE("isomorphism of independently constructed references") {
  CHECK(is_isomorphic(build_named("G20"), inversion_semidirect_18()).has_value());
  CHECK(is_isomorphic(build_named("G39"), heisenberg_27()).has_value());
  CHECK(!is_isomorphic(cyclic_group(4), direct_product(cyclic_group(2), cyclic_group(2))).has_value());
  // returned maps verify
  auto h = is_isomorphic(build_named("G20"), inversion_semidirect_18());
  GroupTable ref = inversion_semidirect_18();
  Homomorphism hh;
  hh.source = &build_named("G20");
  hh.target = &ref;
  hh.images = h->images;
  CHECK(verify_homomorphism(hh));
  CHECK(is_bijective(hh));
}

TEST_CASE("isomorphism is reflexive and symmetric on the catalogue") {
  for (const char* k : {"G20", "R54", "G39", "G81"}) {
    const GroupTable& g = build_named(k);
    CHECK(is_isomorphic(g, g).has_value());
  }
  const GroupTable& a = build_named("G81");
  GroupTable b = heisenberg_27();
  CHECK(is_isomorphic(build_named("G39"), b).has_value());
  CHECK(is_isomorphic(b, build_named("G39")).has_value());
  CHECK(!is_isomorphic(a, build_named("G39")).has_value());
}

TEST_CASE("isomorphism is found for a relabeled copy at the largest order") {
  const GroupTable& g = build_named("G243");
  std::vector<int> pi(g.order), inv(g.order);
  for (int i = 0; i < g.order; ++i) pi[i] = (7 * i + 3) % g.order;  // fixed permutation
  for (int i = 0; i < g.order; ++i) inv[pi[i]] = i;
  GroupTable h = make_group(g.order, [&](int x, int y) { return pi[g.mul(inv[x], inv[y])]; });
  auto iso = is_isomorphic(g, h);
  REQUIRE(iso.has_value());
  Homomorphism hh;
  hh.source = &g;
  hh.target = &h;
  hh.images = iso->images;
  CHECK(verify_homomorphism(hh));
  CHECK(is_bijective(hh));
}

TEST_CASE("fingerprints agree across isomorphic constructions") {
  Fingerprint f1 = fingerprint(build_named("G20"));
  Fingerprint f2 = fingerprint(inversion_semidirect_18());
  CHECK(f1 == f2);
  CHECK(!(fingerprint(cyclic_group(4)) == fingerprint(direct_product(cyclic_group(2), cyclic_group(2)))));
}

TEST_CASE("homomorphism verification and kernels of the covering maps") {
  const GroupTable& r54 = build_named("R54");
  const GroupTable& g20 = build_named("G20");
  // delta drops the central coordinate: (beta,g1,g2,s) -> (g1,g2,s)
  Homomorphism delta;
  delta.source = &r54;
  delta.target = &g20;
  delta.images.resize(54);
  const NormalFormScheme& rsc = normal_form_scheme(CatalogueKey{CatalogueKey::R54});
  const NormalFormScheme& gsc = normal_form_scheme(CatalogueKey{CatalogueKey::G20});
  for (int i = 0; i < 54; ++i) {
    auto t = rsc.decode(i);
    delta.images[i] = gsc.encode({t[1], t[2], t[3]});
  }
  CHECK(verify_homomorphism(delta));
  CHECK(kernel(delta).size() == 3);
  CHECK(image(delta).size() == 18);

  // identity map
  Homomorphism idm;
  idm.source = &g20;
  idm.target = &g20;
  idm.images.resize(18);
  for (int i = 0; i < 18; ++i) idm.images[i] = i;
  CHECK(verify_homomorphism(idm));
  CHECK(kernel(idm).size() == 1);

  // the covering map of the order-243 group onto the order-81 one
  const GroupTable& g243 = build_named("G243");
  const GroupTable& g81 = build_named("G81");
  Homomorphism d2;
  d2.source = &g243;
  d2.target = &g81;
  d2.images.resize(243);
  const NormalFormScheme& bsc = normal_form_scheme(CatalogueKey{CatalogueKey::G243});
  const NormalFormScheme& ssc = normal_form_scheme(CatalogueKey{CatalogueKey::G81});
  for (int i = 0; i < 243; ++i) {
    auto t = bsc.decode(i);
    d2.images[i] = ssc.encode({t[0], t[2], t[3], t[4]});
  }
  CHECK(verify_homomorphism(d2));
  Subgroup k2 = kernel(d2);
  int z23 = catalogue_generator(CatalogueKey{CatalogueKey::G243}, "z23");
  CHECK(k2.same_elements(subgroup_generated(g243, {z23})));
}

TEST_CASE("commutator power identity when the commutator is central to the pair") {
  // [x^m, y^n] = z^{mn} whenever z = [x,y] commutes with x and y
  for (const char* key : {"G20", "R54", "G39", "G81", "G243"}) {
    const GroupTable& g = build_named(key);
    int checked = 0;
    for (int x = 0; x < g.order; ++x)
      for (int y = 0; y < g.order; ++y) {
        int z = g.commutator(x, y);
        if (g.mul(z, x) != g.mul(x, z) || g.mul(z, y) != g.mul(y, z)) continue;
        int ox = g.element_order(x), oy = g.element_order(y);
        for (int mm = 1; mm <= ox; ++mm)
          for (int nn = 1; nn <= oy; ++nn)
            if (g.commutator(g.pow(x, mm), g.pow(y, nn)) != g.pow(z, mm * nn)) {
              CAPTURE(key);
              CAPTURE(x);
              CAPTURE(y);
              REQUIRE(false);
            }
        ++checked;
      }
    CHECK(checked > 0);
  }
}

TEST_CASE("census of isomorphism classes at orders 8 and 12") {
  // the five groups of order 8 from presentations, pairwise non-isomorphic
  std::vector<Presentation> order8;
  order8.push_back(make_presentation({"a"}, {"a^8"}));
  order8.push_back(make_presentation({"a", "b"}, {"a^4", "b^2", "a*b*a^-1*b^-1"}));
  order8.push_back(make_presentation({"a", "b", "c"},
                                     {"a^2", "b^2", "c^2", "a*b*a^-1*b^-1", "a*c*a^-1*c^-1",
                                      "b*c*b^-1*c^-1"}));
  order8.push_back(make_presentation({"r", "s"}, {"r^4", "s^2", "(r*s)^2"}));
  order8.push_back(make_presentation({"a", "b"}, {"a^4", "a^2*b^-2", "b*a*b^-1*a"}));
  std::vector<GroupTable> g8;
  for (auto& p : order8) {
    g8.push_back(todd_coxeter(p, 100));
    CHECK(g8.back().order == 8);
  }
  for (size_t i = 0; i < g8.size(); ++i)
    for (size_t j = i + 1; j < g8.size(); ++j) CHECK(!is_isomorphic(g8[i], g8[j]).has_value());

  // the five groups of order 12
  std::vector<Presentation> order12;
  order12.push_back(make_presentation({"a"}, {"a^12"}));
  order12.push_back(make_presentation({"a", "b"}, {"a^6", "b^2", "a*b*a^-1*b^-1"}));
  order12.push_back(make_presentation({"r", "s"}, {"r^6", "s^2", "(r*s)^2"}));
  order12.push_back(make_presentation({"a", "b"}, {"a^3", "b^2", "(a*b)^3"}));          // alternating
  order12.push_back(make_presentation({"a", "b"}, {"a^6", "a^3*b^-2", "b*a*b^-1*a"}));  // dicyclic
  std::vector<GroupTable> g12;
  for (auto& p : order12) {
    g12.push_back(todd_coxeter(p, 200));
    CHECK(g12.back().order == 12);
  }
  for (size_t i = 0; i < g12.size(); ++i)
    for (size_t j = i + 1; j < g12.size(); ++j) CHECK(!is_isomorphic(g12[i], g12[j]).has_value());
}

TEST_CASE("generating sets are small and generate") {
  for (const char* key : {"G20", "R54", "G39", "G81", "G243"}) {
    const GroupTable& g = build_named(key);
    auto gens = generating_set(g);
    CHECK(gens.size() <= 4);
    CHECK(subgroup_generated(g, gens).size() == g.order);
  }
}
