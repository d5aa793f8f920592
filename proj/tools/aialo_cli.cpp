#include "aialo/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return aialo::cli_main(argc, argv, std::cout, std::cerr); }
