#include <iostream>
#include <string>
#include <vector>

#include "mgeo/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return mgeo::run_cli(args, std::cout, std::cerr);
}
