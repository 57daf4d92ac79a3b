#include <iostream>

#include "rpart/cli.hpp"

int main(int argc, char** argv) { return rpart::cli::run(argc, argv, std::cout, std::cerr); }
