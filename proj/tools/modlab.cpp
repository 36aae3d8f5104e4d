#include <iostream>

#include "modlab/cli/app.hpp"

int main(int argc, char** argv) {
  return modlab::cli::main_entry(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
