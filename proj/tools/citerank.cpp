#include <iostream>

#include "citerank/cli.hpp"

int main(int argc, char** argv) { return citerank::cli::run(argc, argv, std::cout, std::cerr); }
