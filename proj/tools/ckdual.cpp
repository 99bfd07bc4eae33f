#include <iostream>
#include <string>
#include <vector>

#include "ckdual/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ckdual::run(args, std::cout, std::cerr);
}
