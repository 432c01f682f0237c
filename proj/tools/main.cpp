#include <iostream>

#include "ascgf/cli.hpp"

int main(int argc, char** argv) { return ascgf::run(argc, argv, std::cout, std::cerr); }
