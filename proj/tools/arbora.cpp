#include <iostream>

#include "arbora/cli.hpp"

int main(int argc, char** argv) { return arbora::dispatch(argc, argv, std::cout, std::cerr); }
