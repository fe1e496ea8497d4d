#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "ekr/cli.hpp"

int main(int argc, char **argv) {
  std::vector<std::string> args(argv, argv + argc);
  return ekr::cli::main_entry(args, std::getenv("EKR_THREADS"), std::cout,
                              std::cerr);
}
