#include <iostream>
#include <string>
#include <vector>

#include "fimult/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return fimult::cli::run(args, std::cout, std::cerr);
}
