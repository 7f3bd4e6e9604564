#include <iostream>

#include "cli_lib.hpp"

int main(int argc, char** argv) {
  return sigshift::cli::run_cli(argc, argv, std::cout, std::cerr);
}
