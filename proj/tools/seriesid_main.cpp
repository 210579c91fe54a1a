#include <iostream>
#include <string>
#include <vector>

#include "seriesid/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return seriesid::run(args, std::cout, std::cerr);
}
