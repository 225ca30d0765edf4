#include <iostream>
#include <string>
#include <vector>

#include "swapplanarity/cli.hpp"

int main(int argc, char** argv) {
  return swapplanarity::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
