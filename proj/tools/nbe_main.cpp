#include <iostream>

#include "nbe/cli.hpp"

int main(int argc, char** argv) { return nbe::cli_main(argc, argv, std::cout, std::cerr); }
