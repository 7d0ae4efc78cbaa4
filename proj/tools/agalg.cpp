#include "agalg/cli.hpp"

int main(int argc, char** argv) { return agalg::cli::run(argc, argv, std::cout, std::cerr); }
