#include <catch2/catch_amalgamated.hpp>

#include <phycv/cli/bench.hpp>
#include <phycv/cli/config.hpp>
#include <phycv/cli/io.hpp>
#include <phycv/cli/main.hpp>
#include <phycv/cli/runner.hpp>
#include <phycv/error.hpp>

#include "support/test_images.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

namespace fs = std::filesystem;
using namespace phycv;
using namespace phycv::cli;

namespace {

class TempDir {
public:
    TempDir() {
        static std::atomic<int> counter{0};
        path_ = fs::temp_directory_path() /
                ("phycv_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
        fs::remove_all(path_);
        fs::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const fs::path& path() const { return path_; }
    fs::path operator/(const std::string& name) const { return path_ / name; }

private:
    fs::path path_;
};

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "phycv");
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli_main(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Image gray_image(std::size_t rows, std::size_t cols, std::uint64_t seed) {
    testing::SplitMix rng(seed);
    return Image::from_plane(testing::random_grid(rows, cols, rng));
}

} // namespace

TEST_CASE("quantization rounds half up after clamping", "[cli][io]") {
    CHECK(quantize(1.0) == 255);
    CHECK(quantize(0.0) == 0);
    CHECK(quantize(0.5) == 128);
    CHECK(quantize(1.2) == 255);
    CHECK(quantize(-0.3) == 0);
    CHECK(quantize(254.5 / 255.0) == 255);
    CHECK(quantize(3.0 / 255.0) == 3);
}

TEST_CASE("image load and save", "[cli][io]") {
    TempDir dir;

    SECTION("extreme and midpoint values") {
        Image img(2, 3, 1, 0.0);
        img.at(0, 0) = 1.0;
        img.at(0, 1) = 0.5;
        img.at(0, 2) = 1.2;
        const auto path = dir / "levels.png";
        save_image(img, path);
        const auto back = load_image(path);
        REQUIRE(back.channels() == 1);
        CHECK(back.at(0, 0) == 1.0);
        CHECK(back.at(0, 1) == 128.0 / 255.0);
        CHECK(back.at(0, 2) == 1.0);
        CHECK(back.at(1, 0) == 0.0);
    }
    SECTION("random RGB round trip within one quantization step") {
        testing::SplitMix rng(11);
        const Image img = testing::random_rgb(17, 23, rng);
        const auto path = dir / "rgb.png";
        save_image(img, path);
        const auto back = load_image(path);
        REQUIRE(back.rows() == 17);
        REQUIRE(back.cols() == 23);
        REQUIRE(back.channels() == 3);
        double worst = 0.0;
        for (std::size_t i = 0; i < img.values().size(); ++i) {
            worst = std::max(worst, std::abs(img.values()[i] - back.values()[i]));
        }
        CHECK(worst <= 1.0 / 255.0);
    }
    SECTION("channel order survives the round trip") {
        Image img(2, 2, 3, 0.0);
        img.at(0, 0, 0) = 1.0;
        img.at(0, 1, 1) = 1.0;
        img.at(1, 0, 2) = 1.0;
        const auto path = dir / "rgb_order.png";
        save_image(img, path);
        const auto back = load_image(path);
        CHECK(back.at(0, 0, 0) == 1.0);
        CHECK(back.at(0, 0, 1) == 0.0);
        CHECK(back.at(0, 1, 1) == 1.0);
        CHECK(back.at(1, 0, 2) == 1.0);
        CHECK(back.at(1, 0, 0) == 0.0);
    }
    SECTION("errors") {
        CHECK_THROWS_AS(load_image(dir / "missing.png"), NotFound);
        std::ofstream(dir / "junk.png") << "not an image";
        CHECK_THROWS_AS(load_image(dir / "junk.png"), FormatError);
        CHECK_THROWS_AS(save_image(Image(4, 4, 1, 0.5), dir / "no_such_dir" / "x.png"), IoError);
    }
}

TEST_CASE("map-to-image conversions", "[cli][io]") {
    RealGrid map(1, 3);
    map(0, 0) = -1.0;
    map(0, 1) = 0.0;
    map(0, 2) = 1.0;
    const auto img = phase_map_to_image(map);
    CHECK(img.at(0, 0) == 0.0);
    CHECK(img.at(0, 1) == 0.5);
    CHECK(img.at(0, 2) == 1.0);

    EdgeMap edges(1, 2);
    edges(0, 1) = 1;
    const auto e = edge_map_to_image(edges);
    CHECK(e.at(0, 0) == 0.0);
    CHECK(e.at(0, 1) == 1.0);
}

TEST_CASE("config parsing", "[cli][config]") {
    std::istringstream in("# comment\nwarp = 12.5\n\n  strength=0.4  # trailing\ndigital = true\n");
    const auto cfg = parse_config(in);
    REQUIRE(cfg.size() == 3);
    CHECK(cfg.at("warp") == "12.5");
    CHECK(cfg.at("strength") == "0.4");
    CHECK(config_to_args(cfg) == std::vector<std::string>{"--digital=true", "--strength=0.4", "--warp=12.5"});

    std::istringstream bad("warp 12\n");
    CHECK_THROWS_AS(parse_config(bad), InvalidParameter);
    std::istringstream empty_key(" = 3\n");
    CHECK_THROWS_AS(parse_config(empty_key), InvalidParameter);
    CHECK_THROWS_AS(read_config_file("/nonexistent/phycv.cfg"), NotFound);
}

TEST_CASE("frame enumeration orders by number", "[cli][frames]") {
    TempDir dir;
    for (const char* name : {"frame_10.png", "frame_2.png", "frame_0001.png", "notes.txt", "frame_x.png"}) {
        std::ofstream(dir / name) << "x";
    }
    const auto frames = enumerate_frames(dir.path());
    REQUIRE(frames.size() == 3);
    CHECK(frames[0].path.filename() == "frame_0001.png");
    CHECK(frames[1].path.filename() == "frame_2.png");
    CHECK(frames[2].path.filename() == "frame_10.png");
    CHECK(frames[2].index == 10);
    CHECK_THROWS_AS(enumerate_frames(dir / "missing"), NotFound);
}

TEST_CASE("command line runs", "[cli][run]") {
    TempDir dir;
    const auto input = dir / "in.png";
    save_image(testing::retina_image(48), input);

    SECTION("pst --digital writes a binary edge PNG") {
        const auto output = dir / "edges.png";
        const auto r = invoke({"pst", "--input", input.string(), "--output", output.string(), "--digital"});
        REQUIRE(r.code == kSuccess);
        const auto edges = load_image(output);
        CHECK(edges.rows() == 48);
        CHECK(edges.cols() == 48);
        std::size_t on = 0;
        for (double v : edges.values()) {
            CHECK((v == 0.0 || v == 1.0));
            on += v == 1.0 ? 1 : 0;
        }
        CHECK(on > 0);
    }
    SECTION("each algorithm runs and is byte-deterministic") {
        for (const std::string algo : {"pst", "page", "vevid"}) {
            const auto a = dir / (algo + "_a.png");
            const auto b = dir / (algo + "_b.png");
            REQUIRE(invoke({algo, "-i", input.string(), "-o", a.string()}).code == kSuccess);
            REQUIRE(invoke({algo, "-i", input.string(), "-o", b.string()}).code == kSuccess);
            CHECK(slurp(a) == slurp(b));
            CHECK(!slurp(a).empty());
        }
    }
    SECTION("invalid warp names the flag") {
        const auto r = invoke({"pst", "-i", input.string(), "-o", (dir / "x.png").string(), "--warp", "-1"});
        CHECK(r.code == kUsage);
        CHECK(r.err.find("--warp") != std::string::npos);
        CHECK_FALSE(fs::exists(dir / "x.png"));
    }
    SECTION("missing input is an I/O failure with the file name") {
        const auto r = invoke({"vevid", "-i", (dir / "nope.png").string(), "-o", (dir / "x.png").string()});
        CHECK(r.code == kIo);
        CHECK(r.err.find("nope.png") != std::string::npos);
    }
    SECTION("unknown subcommand or flag is a usage error") {
        CHECK(invoke({"sharpen"}).code == kUsage);
        CHECK(invoke({"pst", "-i", input.string(), "-o", "x.png", "--bogus"}).code == kUsage);
        CHECK(invoke({}).code == kUsage);
    }
    SECTION("config file values apply and flags override them") {
        const auto cfg = dir / "run.cfg";
        std::ofstream(cfg) << "digital = true\nwarp = 30\n";
        const auto from_cfg = dir / "cfg.png";
        const auto flag_wins = dir / "flag.png";
        const auto explicit_flags = dir / "explicit.png";
        REQUIRE(invoke({"pst", "--config", cfg.string(), "-i", input.string(), "-o", from_cfg.string()}).code ==
                kSuccess);
        REQUIRE(invoke({"pst", "--digital", "--warp", "30", "-i", input.string(), "-o", explicit_flags.string()})
                    .code == kSuccess);
        CHECK(slurp(from_cfg) == slurp(explicit_flags));

        REQUIRE(invoke({"pst", "--config", cfg.string(), "--warp", "15", "-i", input.string(), "-o",
                        flag_wins.string()})
                    .code == kSuccess);
        const auto defaults = dir / "defaults.png";
        REQUIRE(invoke({"pst", "--digital", "-i", input.string(), "-o", defaults.string()}).code == kSuccess);
        CHECK(slurp(flag_wins) == slurp(defaults));

        std::ofstream(dir / "bad.cfg") << "warp = -2\n";
        const auto bad = invoke({"pst", "--config", (dir / "bad.cfg").string(), "-i", input.string(), "-o",
                                 (dir / "bad.png").string()});
        CHECK(bad.code == kUsage);
        CHECK(bad.err.find("--warp") != std::string::npos);
    }
}

TEST_CASE("frame sequences", "[cli][frames]") {
    TempDir dir;
    const auto in_dir = dir / "in";
    const auto out_dir = dir / "out";
    fs::create_directories(in_dir);
    for (int i = 1; i <= 10; ++i) {
        char name[32];
        std::snprintf(name, sizeof name, "frame_%04d.png", i);
        save_image(gray_image(16, 20, static_cast<std::uint64_t>(i)), in_dir / name);
    }

    const auto r = invoke({"vevid", "--frames", "-i", in_dir.string(), "-o", out_dir.string()});
    REQUIRE(r.code == kSuccess);
    std::vector<std::string> names;
    for (const auto& entry : fs::directory_iterator(out_dir)) {
        names.push_back(entry.path().filename().string());
    }
    std::sort(names.begin(), names.end());
    REQUIRE(names.size() == 10);
    CHECK(names.front() == "frame_0001.png");
    CHECK(names.back() == "frame_0010.png");

    SECTION("page layers write one image per direction") {
        const auto layers = dir / "layers";
        REQUIRE(invoke({"page", "--layers", "--directions", "4", "-i", (in_dir / "frame_0003.png").string(), "-o",
                        layers.string()})
                    .code == kSuccess);
        for (int d = 0; d < 4; ++d) {
            CHECK(fs::exists(layers / ("frame_0003_theta" + std::to_string(d) + ".png")));
        }
    }
    SECTION("errors carry frame context") {
        std::ofstream(in_dir / "frame_0011.png") << "corrupt";
        const auto bad = invoke({"pst", "--frames", "-i", in_dir.string(), "-o", (dir / "out2").string()});
        CHECK(bad.code == kIo);
        CHECK(bad.err.find("frame_0011.png") != std::string::npos);
    }
}

TEST_CASE("resolution parsing", "[cli][bench]") {
    CHECK(parse_resolution("480p").width == 640);
    CHECK(parse_resolution("480p").height == 480);
    CHECK(parse_resolution("1080p").width == 1920);
    CHECK(parse_resolution("4K").height == 2160);
    const auto custom = parse_resolution("96x64");
    CHECK(custom.width == 96);
    CHECK(custom.height == 64);
    CHECK_THROWS_AS(parse_resolution("huge"), InvalidParameter);
    CHECK_THROWS_AS(parse_resolution("0x10"), InvalidParameter);
}

TEST_CASE("benchmark harness", "[cli][bench]") {
    BenchConfig config;
    config.resolutions = {parse_resolution("64x48"), parse_resolution("96x64")};
    config.repetitions = 3;
    config.warmup = 1;

    SECTION("one record per algorithm and resolution") {
        const auto records = bench(config);
        REQUIRE(records.size() == 8);
        for (const auto& rec : records) {
            CHECK(rec.frames == 3);
            CHECK(rec.ms_mean > 0.0);
            CHECK(rec.ms_std >= 0.0);
            CHECK(rec.includes_colorspace == (rec.algorithm == "vevid" || rec.algorithm == "vevid-lite"));
        }
        std::ostringstream csv;
        write_bench_csv(csv, records);
        std::istringstream lines(csv.str());
        std::string line;
        std::getline(lines, line);
        CHECK(line == kBenchCsvHeader);
        std::size_t rows = 0;
        while (std::getline(lines, line)) {
            CHECK(std::count(line.begin(), line.end(), ',') == 6);
            ++rows;
        }
        CHECK(rows == 8);
    }
    SECTION("fewer than three repetitions is rejected") {
        config.repetitions = 2;
        CHECK_THROWS_AS(bench(config), InvalidParameter);
        CHECK(invoke({"bench", "--repetitions", "2"}).code == kUsage);
    }
    SECTION("unknown algorithm is rejected") {
        config.algorithms = {"sobel"};
        CHECK_THROWS_AS(bench(config), InvalidParameter);
    }
    SECTION("command line writes the CSV") {
        TempDir dir;
        const auto csv = dir / "bench.csv";
        const auto r = invoke({"bench", "--resolutions", "32x32", "--algorithms", "pst,vevid-lite", "--warmup", "0",
                               "-o", csv.string()});
        REQUIRE(r.code == kSuccess);
        const auto text = slurp(csv);
        CHECK(text.rfind(std::string(kBenchCsvHeader) + "\n", 0) == 0);
        CHECK(text.find("pst,32,32,3,") != std::string::npos);
        CHECK(text.find("vevid-lite,32,32,3,") != std::string::npos);
    }
    SECTION("synthetic frames are deterministic and valid") {
        const auto a = synthetic_frame(40, 30);
        const auto b = synthetic_frame(40, 30);
        CHECK(a.rows() == 30);
        CHECK(a.cols() == 40);
        CHECK(a.channels() == 3);
        CHECK(a.values().size() == b.values().size());
        CHECK(std::equal(a.values().begin(), a.values().end(), b.values().begin()));
        CHECK_NOTHROW(validate_image(a));
    }
}
