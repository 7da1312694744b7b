#include <iostream>

#include "bergesat/cli.hpp"

int main(int argc, char** argv) { return bergesat::cli::run(argc, argv, std::cout, std::cerr); }
