#include <iostream>

#include "trisurg/cli.hpp"

int main(int argc, char** argv) {
  return trisurg::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
