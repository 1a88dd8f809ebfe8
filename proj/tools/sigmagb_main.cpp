#include <iostream>

#include "sigmagb/cli.hpp"

int main(int argc, char** argv) { return sigmagb::run_command(argc, argv, std::cout, std::cerr); }
