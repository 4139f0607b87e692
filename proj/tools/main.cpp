#include <iostream>  // for cin, cout, cerr
#include <string>    // for string
#include <vector>    // for vector

#include "cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return bzf::cli::run(args, std::cin, std::cout, std::cerr);
}
