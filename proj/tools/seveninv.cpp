#include <iostream>

#include "seveninv/cli.hpp"

int main(int argc, char** argv) { return seveninv::cli::run(argc, argv, std::cout, std::cerr); }
