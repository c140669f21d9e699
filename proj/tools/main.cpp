#include <iostream>

#include "jordan/cli.hpp"

int main(int argc, char** argv) { return jordan::run_cli(argc, argv, std::cout, std::cerr); }
