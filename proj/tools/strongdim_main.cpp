#include <iostream>
#include <vector>

#include "strongdim/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return smd::run_cli(args, std::cout, std::cerr);
}
