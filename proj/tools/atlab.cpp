#include <iostream>
#include <string>
#include <vector>

#include "atlab/cli.hpp"

int main(int argc, char** argv) {
    return atlab::cli::run(std::vector<std::string>(argv + 1, argv + argc),
                           std::cout, std::cerr);
}
