#include <cstdlib>
#include <iostream>

#include "lcass/cli/commands.hpp"

int main(int argc, char** argv) {
  return lcass::cli::run(argc, argv, std::cout, std::cerr, std::cin, std::getenv("LCASS_CAPS"));
}
