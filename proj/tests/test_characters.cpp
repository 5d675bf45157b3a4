#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fgx/catalogue.hpp>
#include <fgx/characters.hpp>
#include <fgx/isomorphism.hpp>

using namespace fgx;

namespace {

long long degree_square_sum(const CharacterTable& t) {
  long long s = 0;
  for (int d : t.degrees) s += (long long)d * d;
  return s;
}

std::vector<int> sorted_type_degrees(const SpinTypePartition::Type& ty) {
  std::vector<int> d = ty.degrees;
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

TEST_CASE("cyclotomic polynomial values") {
  CHECK(cyclotomic_polynomial(1) == std::vector<long long>{-1, 1});
  CHECK(cyclotomic_polynomial(2) == std::vector<long long>{1, 1});
  CHECK(cyclotomic_polynomial(3) == std::vector<long long>{1, 1, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<long long>{1, -1, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<long long>{1, 0, -1, 0, 1});
  // 1 + zeta + ... + zeta^{e-1} = 0 exactly
  CycPoly all_ones{6, {1, 1, 1, 1, 1, 1}};
  CHECK(cyc_is_zero(all_ones));
  CHECK(!cyc_is_zero(CycPoly::root_power(6, 2)));
}

TEST_CASE("character table of a cyclic group") {
  CharacterTable t = character_table(cyclic_group(3));
  CHECK(t.k == 3);
  CHECK(t.degrees == std::vector<int>{1, 1, 1});
  // the two non-trivial characters take primitive cube-root values on the
  // two non-trivial classes: four evaluations in total
  int root_count = 0;
  for (int i = 0; i < 3; ++i)
    for (int l = 1; l < 3; ++l)
      for (int j = 1; j < 3; ++j)
        if (cyc_equal(t.values[i][l], CycPoly::root_power(3, j))) ++root_count;
  CHECK(root_count == 4);
}

TEST_CASE("character degrees of the symmetric group on four letters") {
  CHECK(irrep_degrees(symmetric_group(4)) == std::vector<int>{1, 1, 2, 3, 3});
}

TEST_CASE("character table of the order-27 base group") {
  const GroupTable& g = build_named("G39");
  CharacterTable t = character_table(g);
  CHECK(t.k == 11);
  CHECK(degree_square_sum(t) == 27);
  CHECK(irrep_degrees(g) == std::vector<int>{1, 1, 1, 1, 1, 1, 1, 1, 1, 3, 3});
}

TEST_CASE("sum of degree squares matches the order on every catalogue table") {
  for (const char* key : {"G20", "R54", "RP54", "G39", "G81", "G243", "TPRIME(4)", "TPRIME(5)"}) {
    CAPTURE(key);
    const GroupTable& g = build_named(key);
    CharacterTable t = character_table(g);
    CHECK(degree_square_sum(t) == g.order);
    CHECK(t.k == (int)conjugacy_classes(g).size());
  }
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      CatalogueKey k{CatalogueKey::G81VAR};
      k.a = a;
      k.b = b;
      CharacterTable t = character_table(build_named(k));
      CHECK(degree_square_sum(t) == 81);
    }
}

TEST_CASE("linear characters biject with the abelianization") {
  for (const char* key : {"G20", "R54", "G39", "G81", "G243", "TPRIME(4)"}) {
    CAPTURE(key);
    const GroupTable& g = build_named(key);
    CharacterTable t = character_table(g);
    int linear = 0;
    for (int d : t.degrees)
      if (d == 1) ++linear;
    Subgroup der = derived_subgroup(g);
    CHECK(linear == g.order / der.size());
  }
}

TEST_CASE("spin types of the order-54 cover: three cube-root types") {
  const GroupTable& h = build_named("R54");
  int z12 = catalogue_generator(CatalogueKey{CatalogueKey::R54}, "z12");
  Subgroup a = subgroup_generated(h, {z12});
  SpinTypePartition part = spin_types(h, a);
  CHECK(part.types.size() == 3);
  for (const auto& ty : part.types) {
    long long s = 0;
    for (int d : ty.degrees) s += (long long)d * d;
    CHECK(s == 18);  // |H| / |A|
    // tau is a cube root of unity on every element of A
    CharacterTable t = character_table(h);
    for (long long exp_idx : ty.tau) CHECK((3 * exp_idx) % t.e == 0);
  }
  // the non-trivial types consist of two degree-3 representations each
  int nontrivial = 0;
  for (const auto& ty : part.types) {
    bool trivial = true;
    for (long long v : ty.tau)
      if (v) trivial = false;
    if (!trivial) {
      ++nontrivial;
      CHECK(sorted_type_degrees(ty) == std::vector<int>{3, 3});
    }
  }
  CHECK(nontrivial == 2);
}

TEST_CASE("spin types of the order-243 cover: nine types of square-sum 27") {
  const GroupTable& h = build_named("G243");
  int z12 = catalogue_generator(CatalogueKey{CatalogueKey::G243}, "z12");
  int z23 = catalogue_generator(CatalogueKey{CatalogueKey::G243}, "z23");
  Subgroup a = subgroup_generated(h, {z12, z23});
  CharacterTable t = character_table(h);
  SpinTypePartition part = spin_types(h, a, &t);
  CHECK(part.types.size() == 9);
  for (const auto& ty : part.types) {
    long long s = 0;
    for (int d : ty.degrees) s += (long long)d * d;
    CHECK(s == 27);
  }
}

TEST_CASE("trivial central subgroup gives a single type") {
  const GroupTable& g = build_named("G20");
  SpinTypePartition part = spin_types(g, trivial_subgroup(g));
  CHECK(part.types.size() == 1);
  CHECK(part.types[0].irreps.size() == size_t(character_table(g).k));
}

TEST_CASE("non-central subgroups are rejected") {
  GroupTable s3 = symmetric_group(3);
  int transposition = -1;
  for (int x = 0; x < 6; ++x)
    if (s3.element_order(x) == 2) { transposition = x; break; }
  CHECK_THROWS_AS(spin_types(s3, subgroup_generated(s3, {transposition})), error);
}

TEST_CASE("trivial spin type reproduces the quotient's degrees") {
  const GroupTable& h = build_named("R54");
  int z12 = catalogue_generator(CatalogueKey{CatalogueKey::R54}, "z12");
  Subgroup a = subgroup_generated(h, {z12});
  SpinTypePartition part = spin_types(h, a);
  QuotientResult q = quotient(h, a);
  std::vector<int> qd = irrep_degrees(*q.group);
  for (const auto& ty : part.types) {
    bool trivial = true;
    for (long long v : ty.tau)
      if (v) trivial = false;
    if (trivial) CHECK(sorted_type_degrees(ty) == qd);
  }
}

TEST_CASE("spin types of the double cover of the symmetric group") {
  const GroupTable& h = build_named("TPRIME(4)");
  // zeta is the last presentation generator; locate it as a central
  // involution inside the derived subgroup
  Subgroup z = center(h);
  REQUIRE(z.size() == 2);
  SpinTypePartition part = spin_types(h, z);
  CHECK(part.types.size() == 2);
  for (const auto& ty : part.types) {
    bool trivial = true;
    for (long long v : ty.tau)
      if (v) trivial = false;
    if (trivial)
      CHECK(sorted_type_degrees(ty) == std::vector<int>{1, 1, 2, 3, 3});
    else
      CHECK(sorted_type_degrees(ty) == std::vector<int>{2, 2, 4});
  }
}

TEST_CASE("the two order-54 constructions and the dimension-3 flag") {
  std::vector<int> d1 = irrep_degrees(build_named("R54"));
  std::vector<int> d2 = irrep_degrees(build_named("RP54"));
  bool has3_1 = std::find(d1.begin(), d1.end(), 3) != d1.end();
  bool has3_2 = std::find(d2.begin(), d2.end(), 3) != d2.end();
  bool iso = is_isomorphic(build_named("R54"), build_named("RP54")).has_value();
  // the flags can only differ when the groups are non-isomorphic
  if (iso) CHECK(has3_1 == has3_2);
  // either way both are covers, so their degree data is consistent
  CHECK(std::accumulate(d1.begin(), d1.end(), 0, [](int a, int b) { return a + b * b; }) == 54);
  CHECK(std::accumulate(d2.begin(), d2.end(), 0, [](int a, int b) { return a + b * b; }) == 54);
  // every efficient cover of the order-18 group carries degree-3 spin
  // representations: each non-trivial type must fill 18 = 9 + 9
  CHECK(has3_1);
  CHECK(has3_2);
  MESSAGE("order-54 covers isomorphic: ", iso);
}

TEST_CASE("character values with irrational cyclotomic entries stay exact") {
  // the Frobenius group of order 21: b a b^-1 = a^2; its two degree-3
  // characters take quadratic-irrational values on the order-7 classes
  Presentation p = make_presentation({"a", "b"}, {"a^7", "b^3", "b*a*b^-1*a^-2"});
  GroupTable g = todd_coxeter(p, 300);
  REQUIRE(g.order == 21);
  CharacterTable t = character_table(g);  // orthogonality is verified internally
  CHECK(t.e == 21);
  std::vector<int> d = t.degrees;
  std::sort(d.begin(), d.end());
  CHECK(d == std::vector<int>{1, 1, 1, 3, 3});
  // a degree-3 value on an order-7 class is a sum of three distinct
  // seventh roots of unity, never a plain integer
  for (int i = 0; i < t.k; ++i) {
    if (t.degrees[i] != 3) continue;
    for (int l = 0; l < t.k; ++l) {
      if (t.rep_order[l] != 7) continue;
      int support = 0;
      for (long long c : t.values[i][l].c) support += c != 0;
      CHECK(support == 3);
    }
  }
}

TEST_CASE("abelian groups have all-linear tables") {
  CHECK(irrep_degrees(direct_product(cyclic_group(2), cyclic_group(4))) ==
        std::vector<int>{1, 1, 1, 1, 1, 1, 1, 1});
}

TEST_CASE("fingerprints extended with degree multisets") {
  Fingerprint f1 = fingerprint_with_degrees(build_named("G39"));
  REQUIRE(f1.irrep_degrees.has_value());
  CHECK(*f1.irrep_degrees == std::vector<int>{1, 1, 1, 1, 1, 1, 1, 1, 1, 3, 3});
  // degree data refines the comparison but agrees on isomorphic groups
  Fingerprint f2 = fingerprint_with_degrees(build_named("R54"));
  Fingerprint f3 = fingerprint_with_degrees(build_named("RP54"));
  CHECK(f2 == f3);
  CHECK(!(f1 == f2));
}
