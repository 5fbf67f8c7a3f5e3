// Runs the full acceptance battery against the bundled example corpus and
// prints one pass/fail line per criterion. Exits nonzero if any gated
// criterion fails. An optional argument restricts the run to one fixture id.

#include <cstring>
#include <iostream>
#include <string>
#include <vector>

#include "jnr/verify.hpp"

int main(int argc, char** argv) {
  jnr::verify::Engine eng;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--only" && i + 1 < argc) {
      eng.only = argv[++i];
    } else if (arg == "--seed" && i + 1 < argc) {
      eng.seed = std::stoull(argv[++i]);
    } else {
      std::cerr << "usage: acceptance [--only FIXTURE] [--seed N]\n";
      return 1;
    }
  }
  std::vector<jnr::verify::CriterionResult> results = jnr::verify::run_acceptance(eng, std::cout);
  int failures = jnr::verify::gated_failures(results);
  return failures == 0 ? 0 : 1;
}
