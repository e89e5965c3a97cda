#include "qsum/cli/app.hpp"

#include <iostream>

int main(int argc, char** argv) { return qsum::cli::run(argc, argv, std::cout, std::cerr); }
