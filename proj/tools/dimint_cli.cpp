#include <iostream>

#include "dimint/cli.hpp"

int main(int argc, char** argv) { return dimint::run_cli(argc, argv, std::cout, std::cerr); }
