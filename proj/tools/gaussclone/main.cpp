#include <iostream>

#include "gaussclone/cli.hpp"

int main(int argc, char** argv) { return gaussclone::cli::run_cli(argc, argv, std::cout, std::cerr); }
