#include <iostream>

#include "seatmatch/cli.hpp"

int main(int argc, char** argv) { return seatmatch::cli::run(argc, argv, std::cout, std::cerr); }
