#include <iostream>
#include <string>
#include <vector>

#include "klsparse/cli.h"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return klsparse::RunCommandLine(args, std::cin, std::cout, std::cerr);
}
