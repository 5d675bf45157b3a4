#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fgx/catalogue.hpp>
#include <fgx/group_table.hpp>
#include <fgx/isomorphism.hpp>
#include <fgx/structure.hpp>
#include <fgx/todd_coxeter.hpp>

using namespace fgx;

TEST_CASE("catalogue orders and axiom sweeps") {
  struct Row {
    const char* key;
    int order;
  };
  const Row rows[] = {{"G20", 18},  {"R54", 54},  {"RP54", 54},       {"G39", 27},
                      {"G81", 81},  {"G243", 243}, {"G81VAR(1,2)", 81}, {"TPRIME(4)", 48}};
  for (const Row& r : rows) {
    CAPTURE(r.key);
    const GroupTable& g = build_named(r.key);
    CHECK(g.order == r.order);
    AxiomReport rep = verify_axioms(g);
    CHECK(rep.all_ok());
  }
}

TEST_CASE("all nine order-81 variants build and verify") {
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      CatalogueKey k{CatalogueKey::G81VAR};
      k.a = a;
      k.b = b;
      const GroupTable& g = build_named(k);
      CHECK(g.order == 81);
      CHECK(verify_axioms(g).all_ok());
    }
}

TEST_CASE("TPRIME orders: 2 n! for n >= 4, degenerate split case at n = 3") {
  CHECK(build_named("TPRIME(4)").order == 48);
  CHECK(build_named("TPRIME(5)").order == 240);
  // n = 3 has no square relator forcing zeta into the derived subgroup;
  // enumeration yields the split group of order 12
  const GroupTable& t3 = build_named("TPRIME(3)");
  CHECK(t3.order == 12);
  Subgroup der = derived_subgroup(t3);
  CHECK(der.size() == 3);  // derived subgroup misses the central involution
}

TEST_CASE("closed-form product rule of the order-54 table") {
  CatalogueKey key{CatalogueKey::R54};
  // hand-applied congruences: beta'' = -1, gamma1'' = 2, gamma2'' = 1
  NormalFormTuple t1{"R54", {0, 1, 1, 0}};
  NormalFormTuple t2{"R54", {0, 1, 0, 0}};
  CHECK(product_normal_form(key, t1, t2).params == std::vector<int>{2, 2, 1, 0});
  // identity acts trivially
  NormalFormTuple id{"R54", {0, 0, 0, 0}};
  NormalFormTuple any{"R54", {2, 1, 2, 1}};
  CHECK(product_normal_form(key, id, any).params == any.params);
  CHECK(product_normal_form(key, any, id).params == any.params);
}

TEST_CASE("collection rule of the order-81 table") {
  CatalogueKey key{CatalogueKey::G81};
  // xi3 * xi1 = z12 xi1 xi2^2 xi3
  NormalFormTuple xi3{"G81", {0, 0, 0, 1}};
  NormalFormTuple xi1{"G81", {0, 1, 0, 0}};
  CHECK(product_normal_form(key, xi3, xi1).params == std::vector<int>{1, 1, 2, 1});
}

TEST_CASE("product rule rejects malformed tuples and ruleless keys") {
  CatalogueKey key{CatalogueKey::R54};
  NormalFormTuple bad{"R54", {0, 1, 1}};
  NormalFormTuple ok{"R54", {0, 0, 0, 0}};
  CHECK_THROWS_AS(product_normal_form(key, bad, ok), error);
  NormalFormTuple oor{"R54", {0, 3, 0, 0}};
  CHECK_THROWS_AS(product_normal_form(key, oor, ok), error);
  CHECK_THROWS_AS(normal_form_scheme(CatalogueKey{CatalogueKey::RP54}), error);
}

TEST_CASE("mixed-radix encode/decode round-trips") {
  for (const char* k : {"G20", "R54", "G39", "G81", "G243"}) {
    CatalogueKey key = parse_catalogue_key(k);
    const NormalFormScheme& sc = normal_form_scheme(key);
    for (int i = 0; i < sc.order(); ++i) CHECK(sc.encode(sc.decode(i)) == i);
  }
}

TEST_CASE("structural identities read off the order-54 table") {
  const GroupTable& h = build_named("R54");
  CatalogueKey key{CatalogueKey::R54};
  int z12 = catalogue_generator(key, "z12");
  int xi1 = catalogue_generator(key, "xi1");
  int xi2 = catalogue_generator(key, "xi2");
  int w = catalogue_generator(key, "w");
  CHECK(h.commutator(xi1, xi2) == z12);
  CHECK(h.element_order(z12) == 3);
  CHECK(h.mul(w, w) == h.identity);
}

TEST_CASE("structural identities read off the order-243 table") {
  const GroupTable& h = build_named("G243");
  CatalogueKey key{CatalogueKey::G243};
  int z12 = catalogue_generator(key, "z12");
  int z23 = catalogue_generator(key, "z23");
  int e1 = catalogue_generator(key, "eta1");
  int e2 = catalogue_generator(key, "eta2");
  int e3 = catalogue_generator(key, "eta3");
  CHECK(h.commutator(e1, e2) == z12);
  CHECK(h.commutator(e2, e3) == z23);
  CHECK(h.element_order(z12) == 3);
  CHECK(h.element_order(z23) == 3);
}

TEST_CASE("coset enumeration on the original generator sets") {
  // a,b,c with (abc)^2 = (ab)^3 = (ac)^3 = 1: the non-abelian group of order 18
  Presentation p1 = make_presentation({"a", "b", "c"},
                                      {"a^2", "b^2", "c^2", "(a*b*c)^2", "(a*b)^3", "(a*c)^3"});
  GroupTable g1 = todd_coxeter(p1, 500);
  CHECK(g1.order == 18);
  CHECK(verify_axioms(g1).all_ok());

  // a,b with a^3 = b^3 = (ab)^3 = (a^-1 b)^3 = 1: order 27
  Presentation p2 = make_presentation({"a", "b"}, {"a^3", "b^3", "(a*b)^3", "(a^-1*b)^3"});
  GroupTable g2 = todd_coxeter(p2, 500);
  CHECK(g2.order == 27);

  // eta_i, zeta presentation of the order-54 cover
  GroupTable g3 = todd_coxeter(catalogue_presentation(parse_catalogue_key("RP54")), 600);
  CHECK(g3.order == 54);

  // trivial relator g^1 collapses everything
  Presentation p4 = make_presentation({"g"}, {"g^1"});
  CHECK(todd_coxeter(p4, 10).order == 1);
}

TEST_CASE("generator change between the two order-18 presentations") {
  Presentation pabc = make_presentation({"a", "b", "c"},
                                        {"a^2", "b^2", "c^2", "(a*b*c)^2", "(a*b)^3", "(a*c)^3"});
  CosetResult tc = todd_coxeter_with_generators(pabc, 500);
  const GroupTable& g = tc.group;
  REQUIRE(g.order == 18);
  int a = tc.generator_elements[0], b = tc.generator_elements[1], c = tc.generator_elements[2];
  int x1 = g.mul(a, b), x2 = g.mul(c, a);
  // the pair commutes and its members have order 3; conjugation by a inverts both
  CHECK(g.mul(x1, x2) == g.mul(x2, x1));
  CHECK(g.element_order(x1) == 3);
  CHECK(g.element_order(x2) == 3);
  CHECK(g.conj(a, x1) == g.inv(x1));
  CHECK(g.conj(a, x2) == g.inv(x2));
  CHECK(is_isomorphic(g, build_named("G20")).has_value());
}

TEST_CASE("commutator identities on the two-generator order-27 presentation") {
  Presentation pab = make_presentation({"a", "b"}, {"a^3", "b^3", "(a*b)^3", "(a^-1*b)^3"});
  CosetResult tc = todd_coxeter_with_generators(pab, 500);
  const GroupTable& g = tc.group;
  REQUIRE(g.order == 27);
  int a = tc.generator_elements[0], b = tc.generator_elements[1];
  int c = g.commutator(b, a);
  CHECK(g.pow(c, 3) == g.identity);
  CHECK(center(g).same_elements(subgroup_generated(g, {c})));
  int bab = g.conj(b, a);
  CHECK(g.mul(bab, a) == g.mul(a, bab));
  int aba = g.conj(a, b);
  CHECK(g.mul(aba, b) == g.mul(b, aba));
  // x1 = b, x2 = c, x3 = a satisfy the three-generator relations
  CHECK(g.commutator(b, a) == c);
  CHECK(g.mul(c, b) == g.mul(b, c));
  CHECK(is_isomorphic(g, build_named("G39")).has_value());
}

TEST_CASE("coincidence-heavy enumerations collapse correctly") {
  // ab = 1 forces b = a^-1, so the group is cyclic of order 2
  Presentation p1 = make_presentation({"a", "b"}, {"a^2", "b^2", "a*b"});
  CHECK(todd_coxeter(p1, 50).order == 2);
  // two power relators with coprime-ish exponents: order gcd(6,4) = 2
  Presentation p2 = make_presentation({"a"}, {"a^6", "a^4"});
  CHECK(todd_coxeter(p2, 50).order == 2);
  // quaternion group of order 8
  Presentation q8 = make_presentation({"a", "b"}, {"a^4", "a^2*b^-2", "b*a*b^-1*a"});
  GroupTable q = todd_coxeter(q8, 100);
  CHECK(q.order == 8);
  auto hist = element_orders(q);
  CHECK(hist[2] == 1);  // a single involution
  CHECK(hist[4] == 6);
  // dihedral group of order 12
  Presentation d12 = make_presentation({"r", "s"}, {"r^6", "s^2", "(r*s)^2"});
  CHECK(todd_coxeter(d12, 200).order == 12);
}

TEST_CASE("coset cap aborts enumerations that cannot finish") {
  Presentation free2 = make_presentation({"a", "b"}, {});
  CHECK_THROWS_AS(todd_coxeter(free2, 200), coset_limit_error);
  Presentation p = make_presentation({"a", "b"}, {"a^2", "b^3"});  // infinite C2 * C3
  CHECK_THROWS_AS(todd_coxeter(p, 1000), coset_limit_error);
}

TEST_CASE("axiom verifier flags corrupted tables") {
  GroupTable g = cyclic_group(6);
  GroupTable bad = g;
  bad.table[7] = (bad.table[7] + 1) % 6;
  AxiomReport rep = verify_axioms(bad);
  CHECK(!rep.all_ok());
  CHECK((!rep.associative || !rep.rows_bijective || !rep.cols_bijective));
}

TEST_CASE("direct and semidirect products") {
  GroupTable c3 = cyclic_group(3);
  GroupTable c3c3 = direct_product(c3, c3);
  CHECK(is_abelian(c3c3));
  CHECK(abelian_invariants(c3c3) == std::vector<long long>{3, 3});

  GroupTable c2 = cyclic_group(2);
  ActionSpec inversion;
  inversion.actor = &c2;
  inversion.acted = &c3c3;
  inversion.apply = [&](int a, int x) { return a ? c3c3.inv(x) : x; };
  GroupTable g18 = semidirect_product(c3c3, c2, inversion);
  CHECK(g18.order == 18);
  CHECK(verify_axioms(g18).all_ok());

  // a broken action is rejected
  ActionSpec broken;
  broken.actor = &c2;
  broken.acted = &c3c3;
  broken.apply = [&](int a, int x) { return a ? (x + 1) % 9 : x; };
  CHECK_THROWS_AS(semidirect_product(c3c3, c2, broken), error);
}

TEST_CASE("unknown keys and out-of-range parameters are rejected") {
  CHECK_THROWS_AS(build_named("G999"), error);
  CHECK_THROWS_AS(parse_catalogue_key("TPRIME(6)"), error);
  CHECK_THROWS_AS(parse_catalogue_key("G81VAR(3,0)"), error);
}

TEST_CASE("word parser handles the documented relator syntax") {
  std::vector<std::string> gens{"a", "b"};
  Word w = parse_word("(a*b)^3", gens);
  CHECK(Presentation::word_letters(w) == std::vector<int>{0, 2, 0, 2, 0, 2});
  Word w2 = parse_word("a^-1*b", gens);
  CHECK(Presentation::word_letters(w2) == std::vector<int>{1, 2});
  Word w3 = parse_word("a^0", gens);
  CHECK(Presentation::word_letters(w3).empty());
  CHECK_THROWS_AS(parse_word("c^2", gens), error);
  CHECK_THROWS_AS(parse_word("(a*b", gens), error);
}
