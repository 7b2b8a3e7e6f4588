#include <iostream>

#include "zpr/cli.hpp"

int main(int argc, char** argv) { return zpr::cli::run(argc, argv, std::cin, std::cout, std::cerr); }
