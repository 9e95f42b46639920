#include <iostream>
#include <string>
#include <vector>

#include "templia/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return templia::run_cli(args, std::cout, std::cerr);
}
