#include <iostream>

#include "polyint_cli/cli.hpp"

int main(int argc, char** argv) {
  return polyint::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
