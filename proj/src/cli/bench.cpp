#include <phycv/cli/bench.hpp>
#include <phycv/error.hpp>

#include <opencv2/core.hpp>
#include <opencv2/imgproc.hpp>

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <numbers>
#include <random>
#include <regex>

namespace phycv::cli {
namespace {

Image resized(const Image& source, std::size_t width, std::size_t height) {
    const int type = source.channels() == 1 ? CV_64FC1 : CV_64FC3;
    // cv::Mat does not take ownership; the copy below detaches it.
    cv::Mat src(static_cast<int>(source.rows()), static_cast<int>(source.cols()), type,
                const_cast<double*>(source.values().data()));
    cv::Mat dst;
    cv::resize(src, dst, cv::Size(static_cast<int>(width), static_cast<int>(height)), 0, 0, cv::INTER_AREA);
    Image out(height, width, source.channels());
    const auto* px = dst.ptr<double>(0);
    std::copy(px, px + out.values().size(), out.values().begin());
    for (double& v : out.values()) {
        v = std::clamp(v, 0.0, 1.0);
    }
    return out;
}

struct Timing {
    double mean = 0.0;
    double stddev = 0.0;
};

Timing time_runs(const std::function<void()>& body, std::size_t warmup, std::size_t repetitions) {
    for (std::size_t i = 0; i < warmup; ++i) {
        body();
    }
    std::vector<double> samples;
    samples.reserve(repetitions);
    for (std::size_t i = 0; i < repetitions; ++i) {
        const auto start = std::chrono::steady_clock::now();
        body();
        const auto stop = std::chrono::steady_clock::now();
        samples.push_back(std::chrono::duration<double, std::milli>(stop - start).count());
    }
    Timing t;
    for (double s : samples) {
        t.mean += s;
    }
    t.mean /= static_cast<double>(samples.size());
    double ss = 0.0;
    for (double s : samples) {
        ss += (s - t.mean) * (s - t.mean);
    }
    t.stddev = samples.size() > 1 ? std::sqrt(ss / static_cast<double>(samples.size() - 1)) : 0.0;
    return t;
}

} // namespace

Resolution parse_resolution(const std::string& text) {
    if (text == "480p") return {"480p", 640, 480};
    if (text == "720p") return {"720p", 1280, 720};
    if (text == "1080p") return {"1080p", 1920, 1080};
    if (text == "2K" || text == "2k") return {"2K", 2560, 1440};
    if (text == "4K" || text == "4k") return {"4K", 3840, 2160};
    static const std::regex wxh(R"((\d+)x(\d+))");
    std::smatch m;
    if (std::regex_match(text, m, wxh)) {
        const auto w = std::stoul(m[1].str());
        const auto h = std::stoul(m[2].str());
        if (w >= 2 && h >= 2) {
            return {text, w, h};
        }
    }
    throw InvalidParameter("unknown resolution '" + text + "'");
}

void BenchConfig::validate() const {
    if (repetitions < 3) {
        throw InvalidParameter("repetitions must be >= 3, got " + std::to_string(repetitions));
    }
    if (resolutions.empty()) {
        throw InvalidParameter("at least one resolution is required");
    }
    for (const auto& name : algorithms) {
        if (name != "pst" && name != "page" && name != "vevid" && name != "vevid-lite") {
            throw InvalidParameter("unknown algorithm '" + name + "'");
        }
    }
    pst.validate();
    page.validate();
    vevid.validate();
}

Image synthetic_frame(std::size_t width, std::size_t height, std::uint32_t seed) {
    Image frame(height, width, 3);
    std::mt19937 rng(seed);
    std::normal_distribution<double> noise(0.0, 0.02);
    const double w = static_cast<double>(width);
    const double h = static_cast<double>(height);
    for (std::size_t r = 0; r < height; ++r) {
        for (std::size_t c = 0; c < width; ++c) {
            const double x = static_cast<double>(c) / w;
            const double y = static_cast<double>(r) / h;
            const double dx = x - 0.5;
            const double dy = y - 0.5;
            const bool disc = dx * dx + dy * dy < 0.04;
            const bool bar = x > 0.1 && x < 0.2;
            const double base = 0.15 + 0.2 * x + 0.1 * std::sin(2.0 * std::numbers::pi * 3.0 * y);
            const double lift = (disc ? 0.3 : 0.0) + (bar ? 0.2 : 0.0);
            frame.at(r, c, 0) = std::clamp(base + lift + noise(rng), 0.0, 1.0);
            frame.at(r, c, 1) = std::clamp(0.8 * base + lift + noise(rng), 0.0, 1.0);
            frame.at(r, c, 2) = std::clamp(0.6 * base + 0.5 * lift + noise(rng), 0.0, 1.0);
        }
    }
    return frame;
}

std::vector<BenchRecord> bench(const BenchConfig& config) {
    config.validate();
    std::vector<BenchRecord> records;
    for (const std::string& algorithm : config.algorithms) {
        for (const Resolution& res : config.resolutions) {
            const Image frame = config.source ? resized(*config.source, res.width, res.height)
                                              : synthetic_frame(res.width, res.height);
            BenchRecord record{algorithm, res.width, res.height, config.repetitions, 0.0, 0.0, false};
            Timing timing;
            if (algorithm == "pst") {
                const PstDetector detector(config.pst);
                timing = time_runs([&] { (void)detector.run(frame); }, config.warmup, config.repetitions);
            } else if (algorithm == "page") {
                const PageDetector detector(config.page);
                timing = time_runs([&] { (void)detector.run(frame); }, config.warmup, config.repetitions);
            } else {
                VevidParams params = config.vevid;
                params.lite = algorithm == "vevid-lite";
                const VevidEnhancer enhancer(params);
                timing = time_runs([&] { (void)enhancer.run(frame); }, config.warmup, config.repetitions);
                record.includes_colorspace = true;
            }
            record.ms_mean = timing.mean;
            record.ms_std = timing.stddev;
            records.push_back(record);
        }
    }
    return records;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records) {
    out << kBenchCsvHeader << '\n';
    const auto flags = out.flags();
    const auto precision = out.precision();
    out << std::fixed << std::setprecision(3);
    for (const auto& r : records) {
        out << r.algorithm << ',' << r.width << ',' << r.height << ',' << r.frames << ',' << r.ms_mean << ','
            << r.ms_std << ',' << (r.includes_colorspace ? "true" : "false") << '\n';
    }
    out.flags(flags);
    out.precision(precision);
}

} // namespace phycv::cli
