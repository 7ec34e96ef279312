#include <iostream>
#include <string>
#include <vector>

#include "gex2/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return gex2::cli::run(args, std::cout, std::cerr);
}
