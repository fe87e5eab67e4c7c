#include <iostream>
#include <vector>

#include "gq/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return gq::dispatch(std::move(args), std::cin, std::cout, std::cerr);
}
