#include <iostream>

#include "genhecke/tools/cli.hpp"

int main(int argc, char** argv) { return genhecke::tools::dispatch(argc, argv, std::cout, std::cerr); }
