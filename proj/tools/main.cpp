#include <iostream>

#include "tsdist/cli.hpp"

int main(int argc, char** argv) {
  return tsdist::cli_main(argc, argv, std::cout, std::cerr);
}
