#include <iostream>

#include "cmaxwell/cli.hpp"

int main(int argc, char** argv) { return cmaxwell::run_cli(argc, argv, std::cout, std::cerr); }
