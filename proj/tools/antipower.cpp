#include <iostream>
#include <string>
#include <vector>

#include "antipower_cli.hpp"

int main(int argc, char** argv) {
    std::ios::sync_with_stdio(false);
    std::vector<std::string> args(argv, argv + argc);
    return antipower::cli::run(args, std::cin, std::cout, std::cerr);
}
