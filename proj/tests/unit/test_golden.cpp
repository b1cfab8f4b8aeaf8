#include <catch2/catch_amalgamated.hpp>

#include <phycv/cli/io.hpp>
#include <phycv/cli/runner.hpp>

#include "golden/golden_cases.hpp"

#include <filesystem>
#include <fstream>
#include <iterator>
#include <string>

#include <unistd.h>

namespace fs = std::filesystem;
using namespace phycv;

namespace {

const fs::path kData = PHYCV_TEST_DATA_DIR;

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

} // namespace

TEST_CASE("golden image regressions", "[golden]") {
    const fs::path tmp = fs::temp_directory_path() / ("phycv_golden_" + std::to_string(::getpid()));
    fs::create_directories(tmp);

    for (auto c : golden::golden_cases()) {
        DYNAMIC_SECTION(c.output) {
            REQUIRE(fs::exists(kData / c.input));
            REQUIRE(fs::exists(kData / c.output));
            c.config.input = kData / c.input;

            c.config.output = tmp / ("a_" + c.output);
            cli::run(c.config);
            c.config.output = tmp / ("b_" + c.output);
            cli::run(c.config);

            CHECK(slurp(tmp / ("a_" + c.output)) == slurp(tmp / ("b_" + c.output)));

            const Image expected = cli::load_image(kData / c.output);
            const Image actual = cli::load_image(tmp / ("a_" + c.output));
            REQUIRE(actual.rows() == expected.rows());
            REQUIRE(actual.cols() == expected.cols());
            REQUIRE(actual.channels() == expected.channels());
            std::size_t mismatched = 0;
            for (std::size_t i = 0; i < expected.values().size(); ++i) {
                mismatched += actual.values()[i] != expected.values()[i] ? 1 : 0;
            }
            CHECK(mismatched == 0);
        }
    }
    std::error_code ec;
    fs::remove_all(tmp, ec);
}
