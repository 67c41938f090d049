#include <iostream>

#include "wdc/cli.hpp"

int main(int argc, char** argv) { return wdc::run(argc, argv, std::cout, std::cerr); }
