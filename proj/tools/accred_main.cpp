#include <iostream>

#include "accred/cli.hpp"

int main(int argc, char** argv) { return accred::dispatch(argc, argv, std::cout, std::cerr); }
