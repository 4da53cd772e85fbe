#include <iostream>
#include <string>
#include <vector>

#include "gns/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return gns::run_cli(args, std::cout, std::cerr);
}
