#include "warpcheck/decide.hpp"

#include <iostream>

int main(int argc, char** argv) {
  return warpcheck::run_cli(argc, argv, std::cout, std::cerr);
}
