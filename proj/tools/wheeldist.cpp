#include "wheeldist/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return wheeldist::run_cli(argc, argv, std::cout, std::cerr); }
