#include <iostream>
#include <string>
#include <vector>

#include "hookmonoid/cli.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    return hookmonoid::cli::run(args, std::cout, std::cerr);
}
