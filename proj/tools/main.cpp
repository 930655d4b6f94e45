#include <iostream>

#include "cliffaut/cli.hpp"

int main(int argc, char** argv) { return cliffaut::run_command(argc, argv, std::cout, std::cerr); }
