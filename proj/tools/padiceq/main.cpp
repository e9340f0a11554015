#include <iostream>
#include <string>
#include <vector>

#include "padiceq/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return padiceq::cli::run(args, std::cout, std::cerr);
}
