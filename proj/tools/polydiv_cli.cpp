#include <iostream>

#include "polydiv/cli.hpp"

int main(int argc, char** argv) { return polydiv::run(argc, argv, std::cout, std::cerr, std::cin); }
