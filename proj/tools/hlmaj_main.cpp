#include <iostream>

#include "hlmaj/cli.hpp"

int main(int argc, char** argv) { return hlmaj::run_cli(argc, argv, std::cout, std::cerr); }
