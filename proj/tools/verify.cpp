// verify: run property suites and print a text or JSON report.
//   verify --suite derham --p 2 --witt-len 3 --seed 42
//   verify --list
// Exit status: 0 all checks pass, 1 some check fails, 2 bad configuration.

#include "prismlab/harness/registry.hpp"
#include "prismlab/harness/report_io.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

using namespace prismlab;
using namespace prismlab::harness;

int main(int argc, char** argv) {
  CLI::App app{"Verify algebraic identities at fixed truncation."};
  SuiteConfig cfg;
  std::optional<std::uint64_t> seed;
  std::string format = "text", out;
  bool list = false;

  app.add_option("--suite", cfg.suite, "suite id, group prefix, or all");
  app.add_option("--p", cfg.p, "prime (default: each suite's own set)");
  app.add_option("--padic-prec", cfg.n_p, "p-adic precision n_p");
  app.add_option("--q-prec", cfg.n_q, "(q-1)-adic precision n_q");
  app.add_option("--series-order", cfg.n_z, "series order n_z");
  app.add_option("--witt-len", cfg.L, "p-typical Witt length");
  app.add_option("--bigwitt", cfg.N_big, "big Witt order");
  app.add_option("--trials", cfg.trials, "random trials per check");
  app.add_option("--seed", seed, "seed (falls back to PRISMLAB_SEED, then 0)");
  app.add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", out, "write the report here instead of stdout");
  app.add_flag("--list", list, "list suites and their citations");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (list) {
    std::cout << list_suites();
    return 0;
  }

  if (seed) cfg.seed = *seed;
  else if (const char* env = std::getenv("PRISMLAB_SEED")) {
    try {
      cfg.seed = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "PRISMLAB_SEED is not an unsigned integer\n";
      return 2;
    }
  }

  RunReport rep;
  try {
    rep = run(cfg);
  } catch (const ConfigError& e) {
    std::string msg = e.what();
    std::cerr << msg.substr(msg.find(": ") + 2) << "\n";
    return 2;
  }

  std::string text = format == "json" ? to_json(rep).dump(2) + "\n" : to_text(rep);
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out);
    if (!f) {
      std::cerr << "cannot write " << out << "\n";
      return 2;
    }
    f << text;
  }
  return rep.ok() ? 0 : 1;
}
