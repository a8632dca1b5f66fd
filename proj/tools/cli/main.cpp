#include <iostream>

#include "ibc/reports/cli.hpp"

int main(int argc, char** argv) {
  return ibc::reports::run_cli(argc, argv, std::cout, std::cerr);
}
