#include <iostream>
#include <string>
#include <vector>

#include "cuspchar/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cuspchar::run_cli(args, std::cin, std::cout, std::cerr);
}
