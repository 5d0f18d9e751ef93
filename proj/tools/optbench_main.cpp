#include <iostream>

#include "optbench/cli/commands.hpp"

int main(int argc, char** argv) {
  return optbench::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
