#include "radsolve/cli.hpp"

#include <iostream>

int main(int argc, char **argv) {
  return radsolve::cli::run(argc, argv, std::cout, std::cerr);
}
