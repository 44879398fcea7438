#include <iostream>

#include "cli_app.hpp"

int main(int argc, char** argv) {
  cayley2::cli::App app(std::cout, std::cerr);
  return app.run(argc, argv);
}
