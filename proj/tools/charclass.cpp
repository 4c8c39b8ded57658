#include <iostream>

#include "charclass/cli.hpp"

int main(int argc, char** argv) { return charclass::run_cli(argc, argv, std::cout, std::cerr); }
