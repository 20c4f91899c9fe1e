#include <iostream>

#include "toricsym/cli.hpp"

int main(int argc, char** argv) {
    return toricsym::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
