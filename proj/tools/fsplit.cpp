#include <iostream>

#include "fsplit/cli.hpp"

int main(int argc, char** argv) { return fsplit::run_cli(argc, argv, std::cout, std::cerr); }
