#include <iostream>

#include "sphgeo/cli.hpp"

int main(int argc, char** argv) { return sg::cli_main(argc, argv, std::cin, std::cout, std::cerr); }
