#include <iostream>

#include "k2forge/catalog/cli.hpp"

int main(int argc, char** argv) { return k2forge::run_cli(argc, argv, std::cout, std::cerr); }
