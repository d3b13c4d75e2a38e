#include <iostream>

#include "bkvc/cli.hpp"

int main(int argc, char** argv) { return bkvc::run_cli(argc, argv, std::cout, std::cerr); }
