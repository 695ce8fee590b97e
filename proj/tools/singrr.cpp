#include <iostream>

#include "singrr/cli.hpp"

int main(int argc, char** argv) { return singrr::cli::run(argc, argv, std::cout, std::cerr); }
