#include <iostream>
#include <string>
#include <vector>

#include "cwlab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cwlab::run_cli(args, std::cout, std::cerr);
}
