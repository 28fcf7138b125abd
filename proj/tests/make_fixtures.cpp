#include <filesystem>
#include <fstream>
#include <iostream>

#include "support/fixtures.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_fixtures DIR\n";
    return 64;
  }
  std::filesystem::create_directories(argv[1]);
  for (const auto& [name, text] : twoseg::testing::build_fixtures()) {
    std::ofstream(std::filesystem::path(argv[1]) / name, std::ios::binary) << text;
    std::cout << name << "\n";
  }
}
