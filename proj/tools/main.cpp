#include "toroidal/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return toroidal::dispatch(argc, argv, std::cout, std::cerr); }
