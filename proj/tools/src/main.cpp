#include <iostream>

#include "app.hpp"

int main(int argc, char** argv) {
  return symcut::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
