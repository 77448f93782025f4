#include <iostream>

#include "sector_radius/cli/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return sector_radius::cli::run(args, std::cin, std::cout, std::cerr);
}
