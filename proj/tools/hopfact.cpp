#include <iostream>

#include "hopfact/cli.hpp"

int main(int argc, char** argv) {
    return hopfact::run_command(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
