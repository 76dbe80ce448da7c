#include <iostream>

#include "qosr/cli/cli.hpp"

int main(int argc, char** argv) { return qosr::cli::run(argc, argv, std::cout, std::cerr); }
