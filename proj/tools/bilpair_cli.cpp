#include <iostream>

#include "bilpair/cli/cli.hpp"

int main(int argc, char** argv) { return bilpair::cli::run(argc, argv, std::cout, std::cerr); }
