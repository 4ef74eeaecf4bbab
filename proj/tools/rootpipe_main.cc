#include <iostream>

#include "cli.h"

int main(int argc, char** argv) {
  return rootpipe::cli::Run(argc, argv, std::cout, std::cerr);
}
