#include <iostream>

#include "qcbound/cli.hpp"

int main(int argc, char** argv) { return qcbound::cli::run_cli(argc, argv, std::cout, std::cerr); }
