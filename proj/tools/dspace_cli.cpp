// Command-line entry point: runs a named verification suite with configurable
// caps and emits a human summary plus an optional JSON report.
//
// Every flag can also be set through an environment variable with the DSPACE_
// prefix (--max-degree -> DSPACE_MAX_DEGREE, and so on). Exit status: 0 when
// every check of the suite passes, 1 on check failures or module errors
// (cap violations, malformed fixtures), 2 on usage errors or unknown suites.

#include <CLI11.hpp>

#include <dspace/suites.hpp>

#include <fstream>
#include <iostream>

int main(int argc, char** argv) {
  dspace::SuiteConfig cfg;
  bool list = false;

  CLI::App app{"diagram-space verification suites"};
  app.add_option("--suite", cfg.suite, "suite to run (see --list-suites)")
      ->envname("DSPACE_SUITE");
  app.add_option("--max-degree", cfg.max_degree, "index-category degree cap")
      ->envname("DSPACE_MAX_DEGREE");
  app.add_option("--dim", cfg.dim_cap, "simplicial dimension cap")
      ->envname("DSPACE_DIM");
  app.add_option("--arity-cap", cfg.arity_cap, "operad arity truncation")
      ->envname("DSPACE_ARITY_CAP");
  app.add_option("--p-max", cfg.p_max, "spectrum evaluation degree cap")
      ->envname("DSPACE_P_MAX");
  app.add_option("--seed", cfg.seed, "seed for randomized fixtures")
      ->envname("DSPACE_SEED");
  app.add_option("--fixtures", cfg.fixtures, "fixture corpus directory")
      ->envname("DSPACE_FIXTURES");
  app.add_option("--format", cfg.format, "output format: text or json")
      ->envname("DSPACE_FORMAT");
  app.add_option("--out", cfg.out, "write the JSON report to this path")
      ->envname("DSPACE_OUT");
  app.add_flag("--list-suites", list, "list the available suites and exit")
      ->envname("DSPACE_LIST_SUITES");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the usage message
    return 2;
  }

  if (list) {
    if (cfg.format == "json") {
      std::cout << dspace::list_suites_json().dump(1) << "\n";
    } else {
      for (auto& d : dspace::suites::registry())
        std::cout << d.name << ": " << d.description << "\n";
    }
    return 0;
  }
  if (cfg.suite.empty()) {
    std::cerr << "error: --suite is required (or use --list-suites)\n";
    return 2;
  }

  dspace::SuiteResult result;
  int code = dspace::run_suite(cfg, result);
  dspace::json report = dspace::suite_report_json(result, cfg);
  if (!cfg.out.empty()) {
    std::ofstream out(cfg.out);
    if (!out) {
      std::cerr << "error: cannot write " << cfg.out << "\n";
      return 2;
    }
    out << report.dump(1) << "\n";
  }
  if (cfg.format == "json") {
    std::cout << report.dump(1) << "\n";
    return code;
  }
  if (result.error) {
    std::cerr << "error: " << result.error_text << "\n";
    return code;
  }
  for (auto& c : result.checks) {
    std::cout << (c.pass ? "[ ok ] " : "[fail] ") << c.name << "\n";
    if (!c.pass)
      for (auto& w : c.witnesses) std::cout << "       " << w << "\n";
  }
  std::cout << "suite " << result.suite << ": "
            << (result.pass() ? "PASS" : "FAIL") << " ("
            << result.checks.size() << " checks)\n";
  return code;
}
