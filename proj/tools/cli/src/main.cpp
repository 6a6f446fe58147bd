#include <iostream>

#include "drw/cli/commands.hpp"

int main(int argc, char** argv) { return drw::cli::run(argc, argv, std::cout, std::cerr); }
