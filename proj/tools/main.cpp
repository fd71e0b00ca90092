#include <iostream>

#include "cyset/cli.hpp"

int main(int argc, char** argv) {
  return cyset::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
