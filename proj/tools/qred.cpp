#include <iostream>

#include "qred/cli.hpp"

int main(int argc, char **argv) {
    return qred::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
