#include <iostream>
#include <string>
#include <vector>

#include "cuecast/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cuecast::run_cli(args, std::cout, std::cerr);
}
