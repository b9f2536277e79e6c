#include <iostream>

#include "hyper3/cli.hpp"

int main(int argc, char** argv) {
  return hyper3::run_cli(argc, argv, std::cout, std::cerr);
}
