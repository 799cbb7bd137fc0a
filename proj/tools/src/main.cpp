#include <iostream>
#include <string>
#include <vector>

#include "superweyl_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return superweyl::cli::run(args, std::cout, std::cerr);
}
