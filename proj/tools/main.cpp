#include <iostream>

#include "cycmds/cli.hpp"

int main(int argc, char** argv) { return cycmds::run_cli(argc, argv, std::cout, std::cerr); }
