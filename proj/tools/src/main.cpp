#include <iostream>

#include "sphunit_tools/cli.hpp"

int main(int argc, char** argv) {
  return sphunit::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
