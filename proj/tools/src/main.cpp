#include "commands.hpp"

#include <iostream>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return conesing::cli::run(args, std::cout, std::cerr);
}
