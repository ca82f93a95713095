#include <iostream>

#include "cli/cli.hpp"

int main(int argc, char** argv) { return apnforge::cli::main(argc, argv, std::cout, std::cerr); }
