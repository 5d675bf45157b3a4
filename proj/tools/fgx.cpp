// fgx: exact finite-group toolkit command line.
// Build catalogue groups, analyze Cayley tables, compute Schur multipliers
// and character tables, enumerate cosets, search for one-step efficient
// central extensions, and run the full verification suite.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include <fgx/json_io.hpp>
#include <fgx/verification.hpp>

namespace {

using namespace fgx;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct LoadedGroup {
  GroupTable table;
  std::string name;
};

bool file_exists(const std::string& path) {
  std::ifstream f(path);
  return f.good();
}

// A source argument is a readable file with a Cayley table, or a
// catalogue key.
LoadedGroup load_group_arg(const std::string& arg, int tprime_n) {
  if (file_exists(arg)) {
    GroupTable g = cayley_from_json(load_json_file(arg));
    AxiomReport rep = verify_axioms(g);
    if (!rep.all_ok()) fail("table in '" + arg + "' fails the group axioms: " + rep.detail);
    return {std::move(g), arg};
  }
  CatalogueKey key = parse_catalogue_key(arg, tprime_n);
  return {build_named(key), key.str()};
}

void emit(const json& j, const std::string& format, std::ostream& os) {
  if (format == "json") {
    os << j.dump(2) << "\n";
    return;
  }
  // aligned text: one line per top-level entry
  size_t width = 0;
  for (auto it = j.begin(); it != j.end(); ++it) width = std::max(width, it.key().size());
  for (auto it = j.begin(); it != j.end(); ++it) {
    os << it.key() << std::string(width - it.key().size() + 2, ' ');
    if (it.value().is_string())
      os << it.value().get<std::string>();
    else
      os << it.value().dump();
    os << "\n";
  }
}

void write_or_print(const json& j, const std::string& out) {
  if (out.empty()) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream os(out);
  if (!os) fail("cannot write output file '" + out + "'");
  os << j.dump(2) << "\n";
}

int cmd_verify(const std::vector<std::string>& names, bool all, bool include_slow,
               const std::string& format) {
  if (!all && names.empty()) {
    std::cerr << "verify: pass --all or a list of check names (see --list)\n";
    return kExitUsage;
  }
  VerificationSuiteReport rep = run_verification(all ? std::vector<std::string>{} : names, include_slow);
  if (format == "text") {
    for (const SuiteEntry& e : rep.entries) {
      std::printf("%-28s %-5s %8.1f ms  %s%s%s\n", e.name.c_str(),
                  e.skipped ? "SKIP" : (e.pass ? "PASS" : "FAIL"), e.ms, e.claim.c_str(),
                  e.detail.empty() ? "" : " -- ", e.detail.c_str());
    }
    std::printf("overall: %s\n", rep.all_pass ? "PASS" : "FAIL");
  } else {
    json j;
    json entries = json::array();
    for (const SuiteEntry& e : rep.entries) {
      json je;
      je["name"] = e.name;
      je["claim"] = e.claim;
      je["criterion"] = e.criterion;
      je["status"] = e.skipped ? "SKIP" : (e.pass ? "PASS" : "FAIL");
      je["ms"] = e.ms;
      je["detail"] = e.detail;
      entries.push_back(je);
    }
    j["checks"] = entries;
    j["overall"] = rep.all_pass ? "PASS" : "FAIL";
    std::cout << j.dump(2) << "\n";
  }
  return rep.all_pass ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fgx: exact computations with small finite groups, their central extensions, "
               "Schur multipliers, and character tables"};
  app.require_subcommand(1);

  // build
  auto* build = app.add_subcommand("build", "construct a catalogue group and emit its Cayley table");
  std::string build_key, build_out;
  int build_n = 4;
  build->add_option("key", build_key, "catalogue key, e.g. G20, R54, G81VAR(1,2), TPRIME")->required();
  build->add_option("--n", build_n, "symmetric-group parameter for TPRIME (3..5)");
  build->add_option("--out", build_out, "output file (stdout if omitted)");

  // analyze
  auto* analyze = app.add_subcommand("analyze", "structural report for a Cayley-table file");
  std::string analyze_file, analyze_format = "json";
  analyze->add_option("file", analyze_file, "Cayley JSON file")->required();
  analyze->add_option("--format", analyze_format, "json or text")->check(CLI::IsMember({"json", "text"}));

  // multiplier
  auto* mult = app.add_subcommand("multiplier", "Schur multiplier report");
  std::string mult_arg, mult_format = "json", mult_cocycles;
  long long mult_mod = 0;
  bool mult_force = false;
  int mult_n = 4;
  mult->add_option("group", mult_arg, "Cayley JSON file or catalogue key")->required();
  mult->add_option("--coeff-mod", mult_mod, "coefficient modulus override (default |G|)");
  mult->add_flag("--force", mult_force, "override the size cap");
  mult->add_option("--cocycles-out", mult_cocycles, "write generator cocycles to this file");
  mult->add_option("--n", mult_n, "TPRIME parameter");
  mult->add_option("--format", mult_format, "json or text")->check(CLI::IsMember({"json", "text"}));

  // chartable
  auto* chart = app.add_subcommand("chartable", "exact character table (and spin types)");
  std::string chart_arg, chart_spin, chart_format = "json", chart_out;
  int chart_n = 4;
  chart->add_option("group", chart_arg, "Cayley JSON file or catalogue key")->required();
  chart->add_option("--spin-center", chart_spin,
                    "comma-separated central elements (indices or labels) spanning the kernel");
  chart->add_option("--n", chart_n, "TPRIME parameter");
  chart->add_option("--out", chart_out, "output file (stdout if omitted)");
  chart->add_option("--format", chart_format, "json or text")->check(CLI::IsMember({"json", "text"}));

  // coset
  auto* coset = app.add_subcommand("coset", "enumerate cosets of a presentation into a Cayley table");
  std::string coset_file, coset_out;
  int coset_max = 0;
  coset->add_option("file", coset_file, "presentation JSON file")->required();
  coset->add_option("--max-cosets", coset_max, "coset cap (default FGX_MAX_COSETS or 10000)");
  coset->add_option("--out", coset_out, "output file (stdout if omitted)");

  // stairway
  auto* stair = app.add_subcommand("stairway", "search one-step efficient central extensions");
  std::string stair_arg, stair_outdir, stair_format = "json";
  int stair_d = 0, stair_max = 0, stair_n = 4;
  bool stair_force = false;
  stair->add_option("group", stair_arg, "Cayley JSON file or catalogue key")->required();
  stair->add_option("--order", stair_d, "order d of the central element")->required();
  stair->add_option("--max-results", stair_max, "stop after this many extension types");
  stair->add_option("--out-dir", stair_outdir, "write each extension type's Cayley table here");
  stair->add_flag("--force", stair_force, "override the cohomology size cap");
  stair->add_option("--n", stair_n, "TPRIME parameter");
  stair->add_option("--format", stair_format, "json or text")->check(CLI::IsMember({"json", "text"}));

  // verify
  auto* verify = app.add_subcommand("verify", "run named verification checks");
  std::vector<std::string> verify_names;
  bool verify_all = false, verify_slow = false, verify_list = false;
  std::string verify_format = "json";
  verify->add_option("checks", verify_names, "check names to run");
  verify->add_flag("--all", verify_all, "run every check");
  verify->add_flag("--include-slow", verify_slow, "include slow-tagged checks");
  verify->add_flag("--list", verify_list, "list available checks and exit");
  verify->add_option("--format", verify_format, "json or text")->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? kExitUsage : kExitPass;
  }

  try {
    if (*build) {
      CatalogueKey key = parse_catalogue_key(build_key, build_n);
      write_or_print(cayley_to_json(build_named(key)), build_out);
      return kExitPass;
    }
    if (*analyze) {
      GroupTable g = cayley_from_json(load_json_file(analyze_file));
      AxiomReport rep = verify_axioms(g);
      if (!rep.all_ok()) fail("table in '" + analyze_file + "' fails the group axioms: " + rep.detail);
      emit(analysis_report(g), analyze_format, std::cout);
      return kExitPass;
    }
    if (*mult) {
      LoadedGroup g = load_group_arg(mult_arg, mult_n);
      H2Options opt;
      opt.force = mult_force;
      emit(multiplier_report(g.name, g.table, mult_mod, opt, mult_cocycles), mult_format, std::cout);
      return kExitPass;
    }
    if (*chart) {
      LoadedGroup g = load_group_arg(chart_arg, chart_n);
      CharacterTable t = character_table(g.table);
      json j;
      if (!chart_spin.empty()) {
        // split on commas outside parentheses: labels may contain tuples
        std::vector<std::string> tokens;
        std::string cur;
        int depth = 0;
        for (char c : chart_spin) {
          if (c == '(') ++depth;
          if (c == ')') --depth;
          if (c == ',' && depth == 0) {
            tokens.push_back(cur);
            cur.clear();
          } else {
            cur += c;
          }
        }
        if (!cur.empty()) tokens.push_back(cur);
        std::vector<int> elems;
        for (const std::string& tok : tokens) {
          bool numeric = !tok.empty() && tok.find_first_not_of("0123456789") == std::string::npos;
          int idx = -1;
          if (numeric) {
            idx = std::stoi(tok);
          } else {
            for (int x = 0; x < g.table.order; ++x)
              if (g.table.label(x) == tok) idx = x;
          }
          if (idx < 0 || idx >= g.table.order) fail("unknown element '" + tok + "' in --spin-center");
          elems.push_back(idx);
        }
        Subgroup a = subgroup_generated(g.table, elems);
        SpinTypePartition part = spin_types(g.table, a, &t);
        j = character_table_report(g.table, t, &part);
      } else {
        j = character_table_report(g.table, t, nullptr);
      }
      if (!chart_out.empty()) {
        write_or_print(j, chart_out);
      } else {
        emit(j, chart_format, std::cout);
      }
      return kExitPass;
    }
    if (*coset) {
      Presentation p = presentation_from_json(load_json_file(coset_file));
      int cap = coset_max;
      if (cap <= 0) {
        cap = 10000;
        if (const char* env = std::getenv("FGX_MAX_COSETS")) {
          int v = std::atoi(env);
          if (v > 0) cap = v;
        }
      }
      write_or_print(cayley_to_json(todd_coxeter(p, cap)), coset_out);
      return kExitPass;
    }
    if (*stair) {
      LoadedGroup g = load_group_arg(stair_arg, stair_n);
      H2Options opt;
      opt.force = stair_force;
      auto hits = stairway_search(g.table, stair_d, stair_max, opt);
      emit(stairway_report(g.name, g.table, hits, stair_outdir), stair_format, std::cout);
      return kExitPass;
    }
    if (*verify) {
      if (verify_list) {
        for (const Check& c : verification_checks())
          std::printf("%-28s %s%s\n", c.name.c_str(), c.claim.c_str(), c.slow ? " [slow]" : "");
        return kExitPass;
      }
      return cmd_verify(verify_names, verify_all, verify_slow, verify_format);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
