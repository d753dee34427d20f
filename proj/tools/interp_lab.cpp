#include <iostream>

#include "interp/cli.hpp"

int main(int argc, char** argv) { return interp::cli::run(argc, argv, std::cout, std::cerr); }
