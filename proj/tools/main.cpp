#include <iostream>

#include "permfix/cli.hpp"

int main(int argc, char** argv) { return permfix::run_cli(argc, argv, std::cout, std::cerr); }
