#include <iostream>

#include "qzeta/cli.hpp"

int main(int argc, char** argv) { return qzeta::cli::main_entry(argc, argv, std::cout, std::cerr); }
