#include <iostream>
#include <string>
#include <vector>

#include "fgraph/cli/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return fgraph::cli::run_command(args, std::cout, std::cerr);
}
