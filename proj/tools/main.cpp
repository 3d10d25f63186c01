#include <iostream>

#include "gelfand/cli.hpp"

int main(int argc, char** argv) { return gelfand::dispatch(argc, argv, std::cout, std::cerr); }
