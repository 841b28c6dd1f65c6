#include <iostream>
#include <string>
#include <vector>

#include "lstree/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return lstree::run_cli(args, std::cout, std::cerr);
}
