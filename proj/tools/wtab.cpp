#include <iostream>
#include <string>
#include <vector>

#include "wtab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return wtab::run_cli(args, std::cout, std::cerr);
}
