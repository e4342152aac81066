#include <iostream>

#include "regmeasure/cli.hpp"

int main(int argc, char** argv) { return regmeasure::cli::run(argc, argv, std::cout, std::cerr); }
