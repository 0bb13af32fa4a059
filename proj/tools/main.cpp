#include <iostream>

#include "commands.hpp"

int main(int argc, char** argv) { return a2i::cli::run(argc, argv, std::cout, std::cerr); }
