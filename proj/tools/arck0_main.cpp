#include "arck0/cli.hpp"

#include <iostream>

int main(int argc, char **argv) {
  return arck0::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
