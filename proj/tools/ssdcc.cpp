#include <iostream>

#include "ssd/cli.hpp"

int main(int argc, char** argv) { return ssd::run_cli(argc, argv, std::cout, std::cerr); }
