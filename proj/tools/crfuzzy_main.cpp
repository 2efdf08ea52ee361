#include <iostream>
#include <string>
#include <vector>

#include "crfuzzy/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return crfuzzy::run_cli(args, std::cout, std::cerr);
}
