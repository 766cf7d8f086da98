#include <iostream>

#include "nplatonic/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return nplatonic::run_cli(args, std::cin, std::cout, std::cerr);
}
