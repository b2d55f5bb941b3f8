#include <iostream>
#include <string>
#include <vector>

#include "lambda3/cli.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    return lambda3::run(args, std::cout, std::cerr);
}
