#include <iostream>

#include "partlab/cli.hpp"

int main(int argc, char** argv) {
    return partlab::cli::run(argc, argv, std::cin, std::cout, std::cerr);
}
