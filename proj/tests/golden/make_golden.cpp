// Usage: make_golden <data-dir>
// Writes the synthetic inputs, then the reference outputs computed from the
// decoded inputs.

#include <phycv/cli/io.hpp>
#include <phycv/cli/runner.hpp>

#include "golden/golden_cases.hpp"
#include "support/test_images.hpp"

#include <filesystem>
#include <iostream>

namespace fs = std::filesystem;

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: make_golden <data-dir>\n";
        return 1;
    }
    const fs::path dir = argv[1];
    fs::create_directories(dir);

    phycv::cli::save_image(phycv::testing::retina_image(192), dir / "retina.png");
    phycv::cli::save_image(phycv::testing::radial_pattern(192), dir / "radial.png");
    phycv::cli::save_image(phycv::testing::dark_room(144, 192), dir / "dark_room.png");

    for (auto c : phycv::golden::golden_cases()) {
        c.config.input = dir / c.input;
        c.config.output = dir / c.output;
        phycv::cli::run(c.config);
        std::cout << "wrote " << c.config.output.string() << '\n';
    }
    return 0;
}
