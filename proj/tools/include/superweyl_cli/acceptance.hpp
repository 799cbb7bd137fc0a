#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace superweyl::cli {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
  double budget = 0;  // seconds; 0 for none
};

constexpr std::uint64_t kDefaultSeed = 12345;

/// Runs every criterion, printing one line per criterion as it finishes.
std::vector<CriterionResult> run_acceptance(std::uint64_t seed, std::ostream& out);

}  // namespace superweyl::cli
