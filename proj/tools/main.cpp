#include <iostream>
#include <string>
#include <vector>

#include "split_spectral/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return split_spectral::cli::run(args, std::cout, std::cerr);
}
