#include <iostream>

#include "padicsum/cli.hpp"

int main(int argc, char** argv) { return padicsum::cli::run(argc, argv, std::cout, std::cerr); }
