#include "commdeg/cli.hpp"

#include <iostream>

int main(int argc, char **argv) { return commdeg::run_cli(argc, argv, std::cout, std::cerr); }
