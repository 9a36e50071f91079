#include <unistd.h>

#include <iostream>

#include "zfpd/cli.hpp"

int main(int argc, char** argv) {
  return zfpd::cli::run(argc, argv, {std::cin, std::cout, std::cerr, static_cast<bool>(isatty(STDOUT_FILENO))});
}
