#include <iostream>

#include "cuspbif_cli/cli.hpp"

int main(int argc, char** argv) { return cuspbif::cli::run_cli(argc, argv, std::cout, std::cerr); }
