#include <iostream>

#include "aszeta/cli.hpp"

int main(int argc, char** argv) { return aszeta::cli::main(argc, argv, std::cout, std::cerr); }
