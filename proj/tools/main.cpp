#include <iostream>
#include <string>
#include <vector>

#include "skewline/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return skewline::cli_main(args, std::cout, std::cerr);
}
