#include <iostream>

#include "zzmod/cli.hpp"

int main(int argc, char** argv) {
    return zzmod::cli::run(argc, argv, std::cout, std::cerr);
}
