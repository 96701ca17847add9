#include <iostream>
#include <string>
#include <vector>

#include "gengame/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return gengame::run_cli(args, std::cout, std::cerr);
}
