#include "cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return vogel::cli::run(argc, argv, std::cout, std::cerr); }
