#include <iostream>

#include "monochrome/cli.hpp"

int main(int argc, char** argv) { return monochrome::run_command_line(argc, argv, std::cout, std::cerr); }
