#include <iostream>
#include <string>
#include <vector>

#include "twoseg/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return twoseg::run_command(args, std::cout, std::cerr);
}
