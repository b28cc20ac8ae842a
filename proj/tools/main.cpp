#include <iostream>

#include "glmn/cli.hpp"

int main(int argc, char** argv) { return glmn::cli_run(argc, argv, std::cout, std::cerr); }
