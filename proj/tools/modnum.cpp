#include "modnum/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  return modnum::cli::run(argc, argv, std::cout, std::cerr);
}
