#include <iostream>

#include "sqfrob/cli.hpp"

int main(int argc, char** argv) { return sqfrob::cli::run(argc, argv, std::cout, std::cerr); }
