#include <iostream>

#include "drp/cli.h"

int main(int argc, char** argv) {
  return drp::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
