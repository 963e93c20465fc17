#include <iostream>

#include "parklc/cli.hpp"

int main(int argc, char** argv) { return parklc::run_cli(argc, argv, std::cout, std::cerr); }
