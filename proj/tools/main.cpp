#include <iostream>

#include "gadgetry/cli.hpp"

int main(int argc, char** argv) { return gadgetry::run_cli(argc, argv, std::cout, std::cerr); }
