#include <iostream>

#include "horton/cli.hpp"

int main(int argc, char** argv) {
  return horton::run_cli(argc, argv, std::cout, std::cerr);
}
