// Thin entry point; all logic lives in run_cli so tests can drive the tool
// in-process.
#include "sarkisov/cli.hpp"

#include <iostream>
#include <vector>

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    return sarkisov::run_cli(args, std::cout, std::cerr);
}
