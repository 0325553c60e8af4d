#include <iostream>

#include "sbraid_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return sbraid::cli::execute(args, std::cout, std::cerr);
}
