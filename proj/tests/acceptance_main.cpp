// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Everything runs at desk scale (|X| <= 3, |L| in {2,3,5}) with exact index
// arithmetic; the CLI-level controls run through the installed binary.

#include <sys/wait.h>

#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "lfuzz/json_io.hpp"
#include "lfuzz/suites.hpp"

using namespace lfuzz;

namespace {

std::string g_cli;
std::string g_data;

struct CommandResult {
  int exit_code = -1;
  std::string output;
};

CommandResult run_command(const std::string& args) {
  const std::string cmd = "'" + g_cli + "' " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  CommandResult result;
  if (!pipe) return result;
  char buffer[512];
  while (fgets(buffer, sizeof(buffer), pipe)) result.output += buffer;
  const int status = pclose(pipe);
  if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
  return result;
}

SuiteConfig config_for(const char* lattice_spec, std::size_t max_x, std::uint64_t seed = 1) {
  SuiteConfig cfg;
  cfg.lattice = io::lattice_from_spec(lattice_spec);
  cfg.max_x = max_x;
  cfg.seed = seed;
  return cfg;
}

bool suite_green(const char* id, const SuiteConfig& cfg, std::string& detail) {
  const SuiteResult result = run_suite(id, cfg);
  if (!result.report.passed()) {
    const CheckResult* failure = result.report.first_failure();
    detail = std::string(id) + ": " + failure->name +
             (failure->witness.empty() ? "" : " @ " + failure->witness);
    return false;
  }
  if (!result.report.exhaustive()) {
    detail = std::string(id) + ": quantification was sampled, not exhaustive";
    return false;
  }
  return true;
}

bool criterion_lattice_laws(std::string& detail) {
  for (const char* spec : {"luk:2", "luk:3", "luk:5"}) {
    if (!suite_green("prop-lattice-laws", config_for(spec, 3), detail)) return false;
  }
  auto l5 = io::lattice_from_spec("luk:5");
  auto star = l5->star_table();
  star[0 * l5->size() + 3] = l5->top();
  auto broken = Lattice::from_tables(l5->labels(), l5->leq_table(), std::move(star),
                                     l5->hash_table(), l5->neg_table());
  const ValidationReport report = validate_lattice(*broken);
  const CheckResult* law = report.find("star commutative");
  if (!law || law->passed || law->witness.empty()) {
    detail = "mutated star table was not flagged with a witness";
    return false;
  }
  return true;
}

bool criterion_contravariance(std::string& detail) {
  return suite_green("prop-contravariance", config_for("luk:5", 3), detail);
}

bool criterion_ftransform(std::string& detail) {
  return suite_green("prop-ftransform", config_for("luk:3", 3), detail);
}

bool criterion_composition_closure(std::string& detail) {
  const SuiteConfig cfg = config_for("luk:3", 3);
  for (const char* id : {"prop-category-lspacefp", "prop-category-lftrans",
                         "prop-category-lfprtop", "prop-category-lfcint", "prop-category-qua"}) {
    if (!suite_green(id, cfg, detail)) return false;
  }
  return true;
}

bool criterion_isomorphisms(std::string& detail) {
  const SuiteConfig cfg = config_for("luk:3", 3);
  for (const char* id : {"prop-iso-f1", "prop-iso-f2", "prop-iso-f3", "prop-iso-f4",
                         "prop-iso-f5", "prop-iso-f6", "prop-roundtrips"}) {
    if (!suite_green(id, cfg, detail)) return false;
  }
  return true;
}

bool criterion_qua_embeddings(std::string& detail) {
  const SuiteConfig cfg = config_for("luk:5", 3);
  return suite_green("prop-qua-embed-partition", cfg, detail) &&
         suite_green("prop-qua-embed-pretop", cfg, detail);
}

bool criterion_transfer(std::string& detail) {
  const SuiteConfig cfg = config_for("luk:5", 3);
  return suite_green("prop-transfer-pretop", cfg, detail) &&
         suite_green("prop-transfer-interior", cfg, detail);
}

bool criterion_fig2(std::string& detail) {
  return suite_green("prop-fig2", config_for("luk:5", 3), detail);
}

bool criterion_adjunctions(std::string& detail) {
  return suite_green("prop-adjunction-f3", config_for("luk:5", 3), detail) &&
         suite_green("prop-adjunction-f6", config_for("luk:3", 3), detail);
}

bool criterion_negative_controls(std::string& detail) {
  if (!suite_green("neg-controls", config_for("luk:5", 3), detail)) return false;

  struct CliCase {
    std::string args;
    int want_exit;
    std::string want_output;  // substring, empty = no requirement
  };
  const std::vector<CliCase> cases = {
      {"validate --kind lattice '" + g_data + "/lukasiewicz5.json'", 0, ""},
      {"validate --kind lattice '" + g_data + "/broken_lattice.json'", 1, "star commutative"},
      {"validate --kind partition --lattice luk:5 '" + g_data + "/broken_partition.json'", 1,
       "x2"},
      {"validate --kind partition --lattice luk:5 '" + g_data + "/partition_fixture.json'", 0,
       ""},
      {"validate --kind lattice '" + g_data + "/malformed.json'", 2, "parse error"},
      {"check --suite prop-qua-embed-pretop --lattice luk:5 --max-x 3 --budget 10", 2,
       "budget"},
      {"check --suite prop-no-such-suite --lattice luk:3", 2, "unknown suite"},
      {"transform --what fdown --lattice luk:5 --f '1/2,3/4,1/4' '" + g_data +
           "/partition_fixture.json'",
       0, "[1/2, 1/4]"},
  };
  for (const CliCase& c : cases) {
    const CommandResult result = run_command(c.args);
    if (result.exit_code != c.want_exit) {
      detail = "cli '" + c.args + "': exit " + std::to_string(result.exit_code) + ", expected " +
               std::to_string(c.want_exit);
      return false;
    }
    if (!c.want_output.empty() && result.output.find(c.want_output) == std::string::npos) {
      detail = "cli '" + c.args + "': output lacks '" + c.want_output + "'";
      return false;
    }
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i + 1 < argc; i += 2) {
    const std::string flag = argv[i];
    if (flag == "--cli") g_cli = argv[i + 1];
    if (flag == "--data") g_data = argv[i + 1];
  }
  if (g_cli.empty() || g_data.empty()) {
    std::cerr << "usage: lfuzz_acceptance --cli <path-to-lfuzz> --data <fixture-dir>\n";
    return 2;
  }

  struct Criterion {
    std::string title;
    std::function<bool(std::string&)> body;
  };
  const std::vector<Criterion> criteria = {
      {"lattice laws exhaustive on L2/L3/L5, mutation flagged", criterion_lattice_laws},
      {"backward powerset contravariance, 100 seeded pairs, |L|=5", criterion_contravariance},
      {"lower-transform properties (i)-(iv), 20 partitions, |L|=3, |X|=3", criterion_ftransform},
      {"composition closure in all five categories, >=50 pairs each",
       criterion_composition_closure},
      {"isomorphism and structure round trips are exact identities", criterion_isomorphisms},
      {"Qua embeddings accept all fixture morphisms", criterion_qua_embeddings},
      {"transferred morphisms pass target validators, exhaustive f", criterion_transfer},
      {"commuting square equalities on objects and morphisms", criterion_fig2},
      {"adjunction triangles, naturality and uniqueness", criterion_adjunctions},
      {"negative controls produce designated failures and exit codes",
       criterion_negative_controls},
  };

  bool all_passed = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string detail;
    bool ok = false;
    try {
      ok = criteria[i].body(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    all_passed = all_passed && ok;
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << (i + 1) << ": "
              << criteria[i].title;
    if (!ok) std::cout << " -- " << detail;
    std::cout << "\n";
  }
  std::cout << (all_passed ? "acceptance: all criteria passed" : "acceptance: FAILURES above")
            << "\n";
  return all_passed ? 0 : 1;
}
