#include <iostream>

#include "hskern/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hskern::run_cli(args, std::cout, std::cerr);
}
