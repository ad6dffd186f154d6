#include <iostream>
#include <string>
#include <vector>

#include "trimult/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return trimult::cli::run(args, std::cout, std::cerr);
}
