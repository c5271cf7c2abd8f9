#include <iostream>

#include "yamada/cli.hpp"

int main(int argc, char** argv) {
  return yamada::run_cli(argc, argv, std::cout, std::cerr);
}
