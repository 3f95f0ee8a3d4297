#include "hsint_cli.hpp"

int main(int argc, char** argv) { return hsint::cli::run(argc, argv, std::cout, std::cerr); }
