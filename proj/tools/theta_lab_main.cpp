#include <iostream>
#include <string>
#include <vector>

#include "thetalab/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return thetalab::cli::dispatch(args, std::cout, std::cerr);
}
