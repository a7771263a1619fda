#include <iostream>

#include "sphdist/cli.hpp"

int main(int argc, char** argv) { return sphdist::run_cli(argc, argv, std::cout, std::cerr); }
