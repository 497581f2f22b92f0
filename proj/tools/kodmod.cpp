#include <iostream>

#include "kodaira/cli.hpp"

int main(int argc, char** argv) {
    return kodaira::run_cli(argc, argv, std::cout, std::cerr);
}
