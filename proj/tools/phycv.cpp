#include <phycv/cli/main.hpp>

#include <iostream>

int main(int argc, char** argv) {
    return phycv::cli::cli_main({argv, argv + argc}, std::cout, std::cerr);
}
