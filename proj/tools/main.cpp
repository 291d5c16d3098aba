#include <iostream>

#include "lieqrt/cli.hpp"

int main(int argc, char** argv) { return lieqrt::run_cli(argc, argv, std::cout, std::cerr); }
