#include <iostream>
#include <string>
#include <vector>

#include "greenaug/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return greenaug::dispatch(args, std::cout, std::cerr);
}
