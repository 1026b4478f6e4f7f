#include <iostream>
#include <string>
#include <vector>

#include "espectra/cli/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return espectra::cli::run(args, std::cout, std::cerr);
}
