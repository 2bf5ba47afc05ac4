#include <iostream>

#include "rcq/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return rcq::cli::run(args, std::cout, std::cerr);
}
