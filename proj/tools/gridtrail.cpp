#include <iostream>

#include "gridtrail/cli.hpp"

int main(int argc, char** argv) { return gridtrail::cli::run(argc, argv, std::cout, std::cerr); }
