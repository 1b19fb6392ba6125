#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) { return diam_ramsey::cli::run(argc, argv, std::cout, std::cerr); }
