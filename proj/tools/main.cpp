#include <iostream>
#include <string>
#include <vector>

#include "ordext/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return ordext::cli::run(args, std::cin, std::cout, std::cerr, ordext::cli::Environment::from_process());
}
