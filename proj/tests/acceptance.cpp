// Acceptance suite: runs the full verification registry (slow checks
// included) and prints one pass/fail line per criterion group.
#include <chrono>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include <fgx/verification.hpp>

int main() {
  using namespace fgx;
  const char* criterion_titles[] = {
      "",
      "catalogue orders and full axiom sweeps",
      "normal-form tables match coset enumeration exactly",
      "centers and derived subgroups as exact element sets",
      "schur multipliers by independent computation",
      "representation-group criteria",
      "one-step extension witnesses",
      "structure isomorphisms and presentation identities",
      "variant extensions of the order-27 group",
      "characters, degrees, and spin types",
      "stairway search reproduces the covers",
      "property suites",
  };

  VerificationSuiteReport rep = run_verification({}, /*include_slow=*/true);

  std::map<int, std::vector<const SuiteEntry*>> by_criterion;
  for (const SuiteEntry& e : rep.entries) by_criterion[e.criterion].push_back(&e);

  int passed = 0, total = 0;
  for (auto& [crit, entries] : by_criterion) {
    bool pass = true;
    double ms = 0;
    std::string failing;
    for (const SuiteEntry* e : entries) {
      ms += e->ms;
      if (!e->pass) {
        pass = false;
        failing += " " + e->name;
      }
    }
    ++total;
    if (pass) ++passed;
    std::printf("[%2d/11] %s  %-52s (%.0f ms%s)\n", crit, pass ? "PASS" : "FAIL",
                criterion_titles[crit], ms, failing.empty() ? "" : (";" + failing).c_str());
    for (const SuiteEntry* e : entries)
      if (!e->detail.empty()) std::printf("         - %s: %s\n", e->name.c_str(), e->detail.c_str());
  }
  std::printf("ACCEPTANCE: %d/%d criteria passed\n", passed, total);
  return passed == total ? 0 : 1;
}
