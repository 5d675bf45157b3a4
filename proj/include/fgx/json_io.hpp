// JSON encodings of the file formats: Cayley tables, presentations, and
// the analysis / multiplier / character / stairway reports.
#pragma once

#include <fstream>
#include <string>

#include <json.hpp>

#include "catalogue.hpp"
#include "characters.hpp"
#include "cohomology.hpp"
#include "extensions.hpp"
#include "group_table.hpp"
#include "isomorphism.hpp"
#include "presentation.hpp"
#include "structure.hpp"

namespace fgx {

using nlohmann::json;

inline json cayley_to_json(const GroupTable& g) {
  json j;
  j["order"] = g.order;
  json labels = json::array();
  for (int i = 0; i < g.order; ++i) labels.push_back(g.label(i));
  j["labels"] = labels;
  json rows = json::array();
  for (int i = 0; i < g.order; ++i) {
    json row = json::array();
    for (int c = 0; c < g.order; ++c) row.push_back(g.mul(i, c));
    rows.push_back(row);
  }
  j["table"] = rows;
  return j;
}

inline GroupTable cayley_from_json(const json& j) {
  if (!j.is_object() || !j.contains("order") || !j.contains("table"))
    fail("cayley json must contain 'order' and 'table'");
  int n = j.at("order").get<int>();
  if (n <= 0) fail("cayley json order must be positive");
  const json& rows = j.at("table");
  if (!rows.is_array() || rows.size() != size_t(n)) fail("cayley json table must have 'order' rows");
  std::vector<std::vector<int>> t(n);
  for (int i = 0; i < n; ++i) {
    const json& row = rows.at(i);
    if (!row.is_array() || row.size() != size_t(n)) fail("cayley json row has wrong length");
    for (const json& v : row) {
      int x = v.get<int>();
      if (x < 0 || x >= n) fail("cayley json entry out of range");
      t[i].push_back(x);
    }
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    for (const json& l : j.at("labels")) labels.push_back(l.get<std::string>());
    if (labels.size() != size_t(n)) fail("cayley json labels length mismatch");
  }
  return make_group(n, [&](int a, int b) { return t[a][b]; }, std::move(labels));
}

inline json presentation_to_json(const Presentation& p) {
  json j;
  j["generators"] = p.generators;
  json rel = json::array();
  for (const Word& w : p.relators) rel.push_back(word_to_string(w, p.generators));
  j["relators"] = rel;
  json cent = json::array();
  for (int c : p.central) cent.push_back(p.generators[c]);
  j["central"] = cent;
  return j;
}

inline Presentation presentation_from_json(const json& j) {
  if (!j.is_object() || !j.contains("generators") || !j.contains("relators"))
    fail("presentation json must contain 'generators' and 'relators'");
  std::vector<std::string> gens;
  for (const json& g : j.at("generators")) gens.push_back(g.get<std::string>());
  std::vector<std::string> rels;
  for (const json& r : j.at("relators")) rels.push_back(r.get<std::string>());
  std::vector<std::string> central;
  if (j.contains("central"))
    for (const json& c : j.at("central")) central.push_back(c.get<std::string>());
  return make_presentation(std::move(gens), rels, central);
}

inline json analysis_report(const GroupTable& g) {
  json j;
  j["order"] = g.order;
  j["center_order"] = center(g).size();
  Subgroup der = derived_subgroup(g);
  j["derived_order"] = der.size();
  QuotientResult q = quotient(g, der);
  j["abelianization"] = abelian_invariants(*q.group);
  j["class_count"] = conjugacy_classes(g).size();
  json hist = json::object();
  for (auto& [o, c] : element_orders(g)) hist[std::to_string(o)] = c;
  j["order_histogram"] = hist;
  j["exponent"] = exponent(g);
  return j;
}

inline json multiplier_report(const std::string& name, const GroupTable& g, long long m,
                              H2Options opt = {}, const std::string& cocycle_file = "") {
  if (m == 0) m = g.order;
  CocycleSolver solver(g, uint32_t(m), opt);
  H2Result h2 = solver.h2();
  AbelianStructure mult = solver.multiplier();
  json j;
  j["group"] = name;
  j["coeff_modulus"] = m;
  j["h2_invariants"] = h2.structure.invariant_factors;
  j["hom_size"] = h2.hom_count;
  j["multiplier_invariants"] = mult.invariant_factors;
  if (!cocycle_file.empty()) {
    json gens = json::array();
    for (const CocycleTable& f : h2.generators) {
      json tab = json::array();
      for (int x = 0; x < f.n; ++x) {
        json row = json::array();
        for (int y = 0; y < f.n; ++y) row.push_back(f.at(x, y));
        tab.push_back(row);
      }
      gens.push_back(tab);
    }
    json out;
    out["modulus"] = m;
    out["generator_cocycles"] = gens;
    std::ofstream os(cocycle_file);
    if (!os) fail("cannot write cocycle file '" + cocycle_file + "'");
    os << out.dump(2) << "\n";
    j["generator_cocycles"] = cocycle_file;
  } else {
    j["generator_cocycles"] = nullptr;
  }
  return j;
}

inline json character_table_report(const GroupTable& g, const CharacterTable& t,
                                   const SpinTypePartition* spin = nullptr) {
  json j;
  j["order"] = g.order;
  j["exponent"] = t.e;
  j["prime"] = t.p;
  json classes = json::array();
  for (int l = 0; l < t.k; ++l) {
    json c;
    c["representative"] = g.label(t.class_rep[l]);
    c["size"] = t.class_size[l];
    c["element_order"] = t.rep_order[l];
    classes.push_back(c);
  }
  j["classes"] = classes;
  j["degrees"] = t.degrees;
  json chars = json::array();
  for (int i = 0; i < t.k; ++i) {
    json row = json::array();
    for (int l = 0; l < t.k; ++l) row.push_back(t.values[i][l].c);
    chars.push_back(row);
  }
  j["characters"] = chars;
  if (spin) {
    json types = json::array();
    for (const auto& ty : spin->types) {
      json e;
      e["tau"] = ty.tau;
      e["irreps"] = ty.irreps;
      e["degrees"] = ty.degrees;
      types.push_back(e);
    }
    json sp;
    sp["center_elements"] = spin->center_elements;
    sp["types"] = types;
    j["spin_types"] = sp;
  }
  return j;
}

inline json stairway_report(const std::string& name, const GroupTable& g,
                            const std::vector<StairwayHit>& hits, const std::string& out_dir = "") {
  json j;
  j["base"] = name;
  j["base_order"] = g.order;
  json results = json::array();
  for (size_t i = 0; i < hits.size(); ++i) {
    const StairwayHit& h = hits[i];
    json e;
    e["pair"] = json::array({g.label(h.x), g.label(h.y)});
    e["extension_order"] = h.witness.k->order;
    Subgroup z = subgroup_generated(*h.witness.k, {h.witness.z});
    e["efficient"] = is_efficient(*h.witness.k, z).efficient();
    e["cocycle_class"] = h.cocycle_class;
    if (!out_dir.empty()) {
      std::string file = out_dir + "/stairway_" + std::to_string(i) + ".json";
      std::ofstream os(file);
      if (!os) fail("cannot write extension file '" + file + "'");
      os << cayley_to_json(*h.witness.k).dump() << "\n";
      e["iso_class_representative"] = file;
    } else {
      e["iso_class_representative"] = nullptr;
    }
    results.push_back(e);
  }
  j["results"] = results;
  return j;
}

inline json load_json_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) fail("cannot read file '" + path + "'");
  json j;
  try {
    is >> j;
  } catch (const std::exception& e) {
    fail("malformed json in '" + path + "': " + e.what());
  }
  return j;
}

}  // namespace fgx
