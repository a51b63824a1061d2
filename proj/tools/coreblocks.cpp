#include <iostream>
#include <string>
#include <vector>

#include "coreblocks/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return coreblocks::run_command(std::move(args), std::cout, std::cerr);
}
