#include <iostream>
#include <string>
#include <vector>

#include "groverian/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return groverian::cli::run(args, std::cout, std::cerr);
}
