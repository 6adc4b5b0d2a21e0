#include <iostream>
#include <string>
#include <vector>

#include "posring/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return posring::run_cli(args, std::cout, std::cerr);
}
