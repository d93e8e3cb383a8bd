#include "varphragmen/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return varphragmen::cli::run(argc, argv, std::cin, std::cout, std::cerr);
}
