#include <iostream>

#include "steinitz/cli.hpp"

int main(int argc, char** argv) {
    int code = 0;
    const auto config = steinitz::cli::parse(argc, argv, std::cout, std::cerr, code);
    if (!config) return code;
    return steinitz::cli::run(*config, std::cout, std::cerr);
}
