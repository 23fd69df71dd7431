#include <iostream>

#include "scd/cli.hpp"

int main(int argc, char** argv) { return scd::run_cli(argc, argv, std::cout, std::cerr); }
