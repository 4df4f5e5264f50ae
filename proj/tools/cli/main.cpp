#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) { return hypergroup::cli::run(argc, argv, std::cout); }
