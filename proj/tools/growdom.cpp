#include <iostream>
#include <string>
#include <vector>

#include "growdom/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return growdom::cli::run(args, std::cout, std::cerr);
}
