#include "tsallis/commands.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return tsallis::cli::run(argc, argv, std::cout, std::cerr);
}
