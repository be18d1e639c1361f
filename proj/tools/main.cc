#include <exception>
#include <iostream>

#include "cli.h"

int main(int argc, char** argv) {
  try {
    return superhedge::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "superhedge: internal error: " << e.what() << "\n";
    return 1;
  }
}
