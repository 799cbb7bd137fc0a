#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>

#include "superweyl_cli/acceptance.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = superweyl::cli::kDefaultSeed;
  if (argc > 1) seed = std::strtoull(argv[1], nullptr, 10);
  const auto results = superweyl::cli::run_acceptance(seed, std::cout);
  const bool ok = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.pass; });
  return ok ? 0 : 1;
}
