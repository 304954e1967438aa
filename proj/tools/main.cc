#include <iostream>

#include "cli.h"

int main(int argc, char** argv) {
  return hypocert::cli::main_entry(argc, argv, std::cout, std::cerr);
}
