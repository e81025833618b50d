#include <iostream>

#include "natgt/cli.hpp"

int main(int argc, char** argv) { return natgt::cli::run(argc, argv, std::cout, std::cerr); }
