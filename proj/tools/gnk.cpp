#include <iostream>

#include "gnk/cli.hpp"

int main(int argc, char** argv) { return gnk::cli::run(argc, argv, std::cout, std::cerr); }
