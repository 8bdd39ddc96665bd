#include <iostream>
#include <string>
#include <vector>

#include "rx3/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return rx3::cli::run(args, std::cout, std::cerr);
}
