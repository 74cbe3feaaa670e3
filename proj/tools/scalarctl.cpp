#include <iostream>
#include <string>
#include <vector>

#include "scalar/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return scalar::cli::run(args, std::cout, std::cerr);
}
