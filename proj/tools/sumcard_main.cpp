#include <iostream>
#include <string>
#include <vector>

#include "sumcard/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return sumcard::run_cli(args, std::cout, std::cerr);
}
