// Apache License, Version 2.0, refer to LICENSE.txt
#include <iostream>
#include <string>
#include <vector>

#include "emodist/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return emodist::cli_main(std::move(args), std::cout, std::cerr);
}
