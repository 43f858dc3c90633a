#include <iostream>
#include <string>
#include <vector>

#include "enpt/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return enpt::cli::run_cli(args, std::cin, std::cout, std::cerr);
}
