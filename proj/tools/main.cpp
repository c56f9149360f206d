#include <iostream>

#include "fanfree/cli.hpp"

int main(int argc, char** argv) {
    return fanfree::cli::run(argc, argv, std::cout, std::cerr);
}
