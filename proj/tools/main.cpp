#include <unistd.h>

#include <cstdlib>
#include <iostream>
#include <vector>

#include "cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    bool use_color = isatty(STDOUT_FILENO) != 0 && std::getenv("NO_COLOR") == nullptr;
    return fibredim::cli::run(args, std::cout, std::cerr, use_color);
}
