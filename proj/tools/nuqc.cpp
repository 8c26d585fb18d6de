#include <iostream>

#include "nuqc/cli.hpp"

int main(int argc, char** argv) { return nuqc::cli::run(argc, argv, std::cout, std::cerr); }
