#include <iostream>
#include <string>
#include <vector>

#include "hvcode/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hvcode::cli::run(args, std::cout, std::cerr);
}
