#include "cpsplit/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return cpsplit::cli_main(argc, argv, std::cout, std::cerr); }
