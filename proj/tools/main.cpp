#include <iostream>

#include "taols/cli.hpp"

int main(int argc, char** argv) {
    return taols::cli::main(argc, argv, std::cout, std::cerr);
}
