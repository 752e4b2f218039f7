#include "commands.hpp"

#include <iostream>
#include <string>
#include <vector>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return vtangle::cli::run(args, {std::cin, std::cout, std::cerr});
}
