#include <iostream>

#include "tiltwall_cli/cli.hpp"

int main(int argc, char** argv) {
  return tiltwall::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
