#include <CLI11.hpp>
#include <iostream>
#include <string>
#include <vector>

#include "repvar/errors.hpp"
#include "repvar/report.hpp"

namespace {

bool is_prime(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

uint32_t next_prime_above(uint32_t n) {
  uint32_t c = n + 1;
  while (!is_prime(c)) ++c;
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "repvar: irreducible components and generic invariants of module "
      "varieties of truncated path algebras over prime fields"};
  app.require_subcommand(1);

  repvar::JobConfig job;
  std::string mode_text = "auto";
  std::string dim_text, layering_text;
  uint32_t small_prime = 0;
  uint64_t cap = 0, node_cap = 0;

  struct Cmd {
    const char* name;
    const char* desc;
    bool dim;
    bool layering;
  };
  const std::vector<Cmd> cmds = {
      {"components", "irreducible components of the module variety", true,
       false},
      {"canon-decomp", "canonical decomposition over an acyclic quiver", true,
       false},
      {"subdims", "generically attained submodule dimension vectors", true,
       false},
      {"socle-layering", "generic socle layering of a radical layering",
       false, true},
      {"radical-layering-hereditary",
       "generic radical layering over the path algebra of an acyclic quiver",
       true, false},
      {"generic-module", "specialized generic module of a layering", false,
       true},
      {"gamma", "Gamma of the specialized generic module of a layering",
       false, true},
      {"skeleta", "all skeleta with a given layering", false, true},
  };

  for (const Cmd& c : cmds) {
    CLI::App* sub = app.add_subcommand(c.name, c.desc);
    sub->add_option("--algebra,--quiver", job.algebra_path,
                    "algebra description file")
        ->required();
    if (c.dim)
      sub->add_option("--dim", dim_text,
                      "dimension vector, comma-separated in vertex order")
          ->required();
    if (c.layering)
      sub->add_option("--layering", layering_text,
                      "layering, e.g. \"1:1;2:1;1:1;2:1\"")
          ->required();
    if (std::string(c.name) == "components")
      sub->add_option("--mode", mode_text,
                      "auto|local|acyclic|radsq|general");
    sub->add_option("--prime", job.oracle.prime,
                    "prime for sampling-based invariants");
    sub->add_option("--small-prime", small_prime,
                    "base prime for exhaustive filtration searches");
    sub->add_option("--samples", job.oracle.samples,
                    "sample count for hereditary estimators");
    sub->add_option("--seed", job.oracle.seed, "random seed");
    sub->add_option("--cap", cap, "sequence enumeration cap");
    sub->add_option("--node-cap", node_cap, "filtration search node cap");
    sub->add_option("--format", job.format, "text|structured")
        ->check(CLI::IsMember({"text", "structured"}));
  }

  CLI11_PARSE(app, argc, argv);

  try {
    CLI::App* sub = app.get_subcommands().front();
    job.command = sub->get_name();
    if (!dim_text.empty()) job.dim_text = dim_text;
    if (!layering_text.empty()) job.layering_text = layering_text;
    job.mode = repvar::mode_from_string(mode_text);
    if (cap) job.oracle.seq_cap = cap;
    if (node_cap) job.oracle.node_cap = node_cap;
    if (small_prime) {
      if (!is_prime(small_prime)) {
        std::cerr << "error: --small-prime must be prime\n";
        return 1;
      }
      job.oracle.filtration_primes = {small_prime,
                                      next_prime_above(small_prime)};
    }
    repvar::ReportDocument doc = repvar::run(job);
    std::cout << doc.rendered(job.format);
    return doc.exit_code;
  } catch (const repvar::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
