#include <iostream>

#include "shiftfam/cli.hpp"

int main(int argc, char** argv) {
    return shiftfam::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
