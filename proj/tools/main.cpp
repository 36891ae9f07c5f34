#include <iostream>

#include "harness/harness.hpp"

int main(int argc, char** argv) { return copnum::harness::run_cli(argc, argv, std::cout, std::cerr); }
