#include <iostream>

#include "labyrinth/cli.hpp"

int main(int argc, char** argv) {
  return labyrinth::cli::run(argc, argv, std::cout, std::cerr);
}
