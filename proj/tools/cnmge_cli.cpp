#include <iostream>
#include <string>
#include <vector>

#include "cnmge/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cnmge::cli::run(args, std::cout, std::cerr);
}
