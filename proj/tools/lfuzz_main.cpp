// Command-line front end: load structures from JSON, run validators and
// proposition suites, print human-readable or JSON reports.
//
// Exit codes: 0 pass, 1 checked-and-failed, 2 usage/parse/budget errors.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "lfuzz/json_io.hpp"
#include "lfuzz/suites.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

using lfuzz::io::json;

json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file '" + path + "'");
  return json::parse(in);
}

void print_report(const lfuzz::ValidationReport& report, bool as_json) {
  if (as_json) {
    std::cout << lfuzz::io::report_to_json(report).dump(2) << "\n";
    return;
  }
  for (const lfuzz::CheckResult& c : report.checks()) {
    std::cout << "  " << (c.passed ? "PASS" : "FAIL") << "  " << c.name;
    if (!c.exhaustive) std::cout << "  (sampled)";
    if (!c.passed) std::cout << "\n        witness: " << c.witness;
    std::cout << "\n";
  }
}

struct CommonOptions {
  std::string lattice_spec;
  std::size_t budget = 10000;
  std::size_t samples = 64;
  std::uint64_t seed = 1;
  bool sampling = false;
  bool as_json = false;

  lfuzz::QuantifierConfig quant() const { return {budget, sampling, samples, seed}; }
};

int run_validate(const std::string& kind, const std::string& path, const CommonOptions& opt) {
  const json parsed = parse_file(path);
  lfuzz::LatticePtr lattice;
  if (!opt.lattice_spec.empty()) lattice = lfuzz::io::lattice_from_spec(opt.lattice_spec);

  lfuzz::ValidationReport report;
  if (kind == "lattice") {
    report = lfuzz::validate_lattice(*lfuzz::io::load_lattice(parsed));
  } else if (kind == "partition") {
    if (!lattice) throw std::invalid_argument("--lattice is required for partitions");
    report = lfuzz::validate_partition(lfuzz::io::load_partition(parsed, lattice));
  } else if (kind == "lts") {
    if (!lattice) throw std::invalid_argument("--lattice is required for transformation systems");
    report = lfuzz::validate_lts(lfuzz::io::load_lts(parsed, lattice), opt.quant());
  } else if (kind == "pretopology") {
    report = lfuzz::validate_pretopology(lfuzz::io::load_pretopology(parsed, lattice, opt.quant()));
  } else if (kind == "interior") {
    report = lfuzz::validate_interior(lfuzz::io::load_interior(parsed, lattice, opt.quant()));
  } else if (kind == "morphism") {
    if (!lattice) throw std::invalid_argument("--lattice is required for morphisms");
    report = lfuzz::io::validate_loaded_morphism(lfuzz::io::load_morphism(parsed, lattice, opt.quant()),
                                                 opt.quant());
  } else {
    throw std::invalid_argument("unknown kind '" + kind + "'");
  }

  if (!opt.as_json) {
    std::cout << path << " (" << kind << ")\n";
  }
  print_report(report, opt.as_json);
  if (!opt.as_json) {
    std::cout << (report.passed() ? "OK" : "INVALID") << "\n";
  }
  return report.passed() ? kExitPass : kExitFail;
}

int run_transform(const std::string& what, const std::string& path, const std::string& values,
                  const CommonOptions& opt) {
  const json parsed = parse_file(path);
  lfuzz::LatticePtr lattice;
  if (!opt.lattice_spec.empty()) lattice = lfuzz::io::lattice_from_spec(opt.lattice_spec);

  try {
    lfuzz::FuzzySet result = [&] {
      if (what == "fdown") {
        if (!lattice) throw std::invalid_argument("--lattice is required for partitions");
        const auto p = lfuzz::io::load_partition(parsed, lattice);
        if (const auto report = lfuzz::validate_partition(p); !report.passed()) {
          throw std::invalid_argument("structure is not a valid partition: " +
                                      report.first_failure()->name);
        }
        return lower_ftransform(p, lfuzz::io::parse_value_list(values, p.space(), lattice));
      }
      if (what == "lts") {
        if (!lattice) throw std::invalid_argument("--lattice is required for transformation systems");
        const auto h = lfuzz::io::load_lts(parsed, lattice);
        if (const auto report = lfuzz::validate_lts(h, opt.quant()); !report.passed()) {
          throw std::invalid_argument("structure is not a valid transformation system: " +
                                      report.first_failure()->name);
        }
        return apply_lts(h, lfuzz::io::parse_value_list(values, h.space(), lattice));
      }
      if (what == "pretop") {
        const auto s = lfuzz::io::load_pretopology(parsed, lattice, opt.quant());
        return s.apply(lfuzz::io::parse_value_list(values, s.space(), s.lattice()));
      }
      if (what == "interior") {
        const auto i = lfuzz::io::load_interior(parsed, lattice, opt.quant());
        return i.apply(lfuzz::io::parse_value_list(values, i.space(), i.lattice()));
      }
      throw std::invalid_argument("unknown transform '" + what + "'");
    }();
    std::cout << lfuzz::io::format_fuzzyset(result) << "\n";
    return kExitPass;
  } catch (const lfuzz::QuantifierBudgetError&) {
    throw;  // budget problems are usage errors, handled by main
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
}

int run_check(std::vector<std::string> suites, std::size_t max_x, const CommonOptions& opt) {
  if (suites.empty()) suites.push_back("all");
  if (!(suites.size() == 1 && suites[0] == "all")) {
    for (const std::string& id : suites) {
      if (!lfuzz::is_suite_id(id)) throw std::invalid_argument("unknown suite id '" + id + "'");
    }
  }
  lfuzz::SuiteConfig config;
  config.lattice = lfuzz::io::lattice_from_spec(opt.lattice_spec.empty() ? "luk:3" : opt.lattice_spec);
  config.max_x = max_x;
  config.quant = opt.quant();
  config.seed = opt.seed;

  const std::vector<lfuzz::SuiteResult> results = lfuzz::run_suites(suites, config);
  bool all_passed = true;
  if (opt.as_json) {
    json out = json::array();
    for (const auto& r : results) {
      json entry = lfuzz::io::report_to_json(r.report);
      entry["suite"] = r.id;
      entry["seconds"] = r.seconds;
      out.push_back(std::move(entry));
      all_passed = all_passed && r.report.passed();
    }
    std::cout << out.dump(2) << "\n";
  } else {
    std::size_t width = 0;
    for (const auto& r : results) width = std::max(width, r.id.size());
    for (const auto& r : results) {
      const bool passed = r.report.passed();
      all_passed = all_passed && passed;
      std::cout << r.id << std::string(width - r.id.size() + 2, ' ')
                << (passed ? "PASS" : "FAIL") << "  (" << r.report.checks().size() << " checks, "
                << r.seconds << "s" << (r.report.exhaustive() ? "" : ", sampled") << ")\n";
      if (!passed) {
        for (const lfuzz::CheckResult& c : r.report.checks()) {
          if (!c.passed) std::cout << "    FAIL " << c.name << " -- witness: " << c.witness << "\n";
        }
      }
    }
    std::cout << (all_passed ? "all suites passed" : "some suites FAILED") << "\n";
  }
  return all_passed ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite lattice-valued fuzzy structures: validators, transforms, proposition suites"};
  app.require_subcommand(1);

  CommonOptions opt;
  std::string kind, path, what, values;
  std::vector<std::string> suites;
  std::size_t max_x = 3;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--lattice", opt.lattice_spec, "lattice: luk:k (k-element chain) or a JSON file");
    cmd->add_option("--budget", opt.budget, "max size of an exhaustively enumerated function space");
    cmd->add_option("--samples", opt.samples, "sample count used when sampling is enabled");
    cmd->add_option("--seed", opt.seed, "seed for all randomized fixtures and samples");
    cmd->add_flag("--sampling", opt.sampling, "sample function spaces above the budget");
    cmd->add_flag("--json", opt.as_json, "emit the report as JSON");
  };

  CLI::App* validate = app.add_subcommand("validate", "validate a structure file");
  validate->add_option("--kind", kind, "lattice|partition|lts|pretopology|interior|morphism")
      ->required();
  validate->add_option("file", path, "JSON file")->required();
  add_common(validate);

  CLI::App* transform = app.add_subcommand("transform", "apply a transform to explicit values");
  transform->add_option("--what", what, "fdown|lts|pretop|interior")->required();
  transform->add_option("--f", values, "comma-separated carrier labels, e.g. \"1/2,3/4,0\"")
      ->required();
  transform->add_option("file", path, "JSON structure file")->required();
  add_common(transform);

  CLI::App* check = app.add_subcommand("check", "run proposition suites");
  check->add_option("--suite", suites, "suite ids or 'all'")->delimiter(',');
  check->add_option("--max-x", max_x, "largest carrier size used for fixture sets");
  add_common(check);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (validate->parsed()) return run_validate(kind, path, opt);
    if (transform->parsed()) return run_transform(what, path, values, opt);
    return run_check(suites, max_x, opt);
  } catch (const lfuzz::QuantifierBudgetError& e) {
    std::cerr << "quantifier budget error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const json::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
