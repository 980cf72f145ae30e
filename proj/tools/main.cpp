#include <iostream>

#include "heisverma/cli.hpp"

int main(int argc, char** argv) { return heisverma::run_cli(argc, argv, std::cout, std::cerr); }
