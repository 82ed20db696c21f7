#include <iostream>

#include <eform/cli/cli.hpp>

int main(int argc, char** argv) { return eform::cli::run_verify(argc, argv, std::cout, std::cerr); }
