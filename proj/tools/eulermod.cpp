#include <iostream>

#include "eulermod/cli.hpp"

int main(int argc, char** argv) { return eulermod::cli::main_entry(argc, argv, std::cout, std::cerr); }
