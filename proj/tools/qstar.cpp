#include <iostream>

#include "qstar/cli.hpp"

int main(int argc, char** argv) {
  return qstar::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
