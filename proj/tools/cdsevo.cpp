#include <iostream>

#include "cdsevo/cli.hpp"

int main(int argc, char** argv) {
  return cdsevo::cli::run_cli(argc, argv, std::cout, std::cerr);
}
