#include <iostream>
#include <string>
#include <vector>

#include "isodual/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return isodual::run_cli(std::move(args), std::cout, std::cerr);
}
