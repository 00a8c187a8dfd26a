#include <iostream>

#include "denumerant/cli.hpp"

int main(int argc, char** argv) { return denumerant::cli_main(argc, argv, std::cout, std::cerr); }
