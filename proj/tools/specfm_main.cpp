#include <iostream>

#include "specfm/cli.hpp"

int main(int argc, char** argv) { return specfm::run_cli(argc, argv, std::cout, std::cerr); }
