#include <iostream>

#include "modcodes/cli.hpp"

int main(int argc, char** argv) { return modcodes::cli::run(argc, argv, std::cout, std::cerr); }
