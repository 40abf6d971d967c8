#include <iostream>

#include "raag/cli.hpp"

int main(int argc, char** argv) {
  return raag::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
