#include <iostream>

#include "pgemb_cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return pgemb::cli::run(std::move(args), std::cout, std::cerr);
}
