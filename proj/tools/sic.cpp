#include <iostream>

#include "sic/cli/commands.hpp"

int main(int argc, char** argv) { return sic::cli::run(argc, argv, std::cout, std::cerr); }
