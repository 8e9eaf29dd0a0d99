#include <iostream>

#include "linfty_cli/app.hpp"

int main(int argc, char** argv) {
  return linfty::cli::run_app({argv + 1, argv + argc}, std::cout, std::cerr);
}
