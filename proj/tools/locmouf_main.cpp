#include <iostream>

#include "locmouf/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return locmouf::run(args, std::cout, std::cerr);
}
