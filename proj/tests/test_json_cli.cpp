#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <set>

#include <fgx/json_io.hpp>
#include <fgx/verification.hpp>

using namespace fgx;

TEST_CASE("cayley tables round-trip through json") {
  for (const char* key : {"G20", "G39", "R54"}) {
    const GroupTable& g = build_named(key);
    json j = cayley_to_json(g);
    GroupTable back = cayley_from_json(j);
    CHECK(back.order == g.order);
    CHECK(back.table == g.table);
    CHECK(back.identity == g.identity);
    CHECK(back.labels == g.labels);
  }
}

TEST_CASE("malformed cayley json is rejected with distinct messages") {
  json j;
  CHECK_THROWS_AS(cayley_from_json(j), error);
  j["order"] = 2;
  j["table"] = json::array({json::array({0, 1})});
  CHECK_THROWS_AS(cayley_from_json(j), error);  // wrong row count
  j["table"] = json::array({json::array({0, 5}), json::array({1, 0})});
  CHECK_THROWS_AS(cayley_from_json(j), error);  // entry out of range
  // a latin square that is not associative parses but fails verify_axioms
  json q;
  q["order"] = 5;
  json rows = json::array();
  // addition mod 5 twisted at one entry is no longer a group table
  for (int i = 0; i < 5; ++i) {
    json row = json::array();
    for (int c = 0; c < 5; ++c) row.push_back((i + c) % 5);
    rows.push_back(row);
  }
  q["table"] = rows;
  GroupTable ok = cayley_from_json(q);
  CHECK(verify_axioms(ok).all_ok());
}

TEST_CASE("presentations round-trip through json") {
  Presentation p = catalogue_presentation(parse_catalogue_key("G81"));
  json j = presentation_to_json(p);
  Presentation back = presentation_from_json(j);
  CHECK(back.generators == p.generators);
  CHECK(back.central == p.central);
  GroupTable g1 = todd_coxeter(p, 1000);
  GroupTable g2 = todd_coxeter(back, 1000);
  CHECK(g1.order == g2.order);
  CHECK(g1.table == g2.table);  // identical relators give identical enumerations
}

TEST_CASE("analysis report fields") {
  json j = analysis_report(build_named("G243"));
  CHECK(j["order"] == 243);
  CHECK(j["center_order"] == 9);
  CHECK(j["derived_order"] == 27);
  CHECK(j["class_count"] == 35);
  CHECK(j["abelianization"] == json::array({3, 3}));
}

TEST_CASE("multiplier report fields") {
  json j = multiplier_report("G39", build_named("G39"), 0);
  CHECK(j["group"] == "G39");
  CHECK(j["coeff_modulus"] == 27);
  CHECK(j["multiplier_invariants"] == json::array({3, 3}));
  CHECK(j["hom_size"] == 9);
  CHECK(j["generator_cocycles"].is_null());
}

TEST_CASE("character table report carries spin types") {
  const GroupTable& h = build_named("R54");
  CharacterTable t = character_table(h);
  int z = catalogue_generator(CatalogueKey{CatalogueKey::R54}, "z12");
  SpinTypePartition part = spin_types(h, subgroup_generated(h, {z}), &t);
  json j = character_table_report(h, t, &part);
  CHECK(j["degrees"].size() == size_t(t.k));
  CHECK(j["spin_types"]["types"].size() == 3);
  CHECK(j["classes"].size() == size_t(t.k));
}

TEST_CASE("stairway report lists efficient extensions") {
  const GroupTable& g = build_named("G20");
  auto hits = stairway_search(g, 3);
  json j = stairway_report("G20", g, hits);
  CHECK(j["results"].size() == hits.size());
  for (const json& e : j["results"]) {
    CHECK(e["extension_order"] == 54);
    CHECK(e["efficient"] == true);
  }
}

TEST_CASE("verification registry names are unique and cover all criteria") {
  std::set<std::string> names;
  std::set<int> criteria;
  for (const Check& c : verification_checks()) {
    CHECK(names.insert(c.name).second);
    criteria.insert(c.criterion);
  }
  for (int c = 1; c <= 11; ++c) CHECK(criteria.count(c) == 1);
}

TEST_CASE("single-check verification runs by name") {
  VerificationSuiteReport rep = run_verification({"degrees-27"}, false);
  REQUIRE(rep.entries.size() == 1);
  CHECK(rep.entries[0].pass);
  CHECK_THROWS_AS(run_verification({"no-such-check"}, false), error);
}
