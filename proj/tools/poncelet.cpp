#include <iostream>

#include "poncelet/cli.hpp"

int main(int argc, char** argv) { return poncelet::cli::run(argc, argv, std::cout, std::cerr); }
