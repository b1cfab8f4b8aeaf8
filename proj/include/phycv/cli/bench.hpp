#pragma once

#include <phycv/image.hpp>
#include <phycv/page.hpp>
#include <phycv/pst.hpp>
#include <phycv/vevid.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace phycv::cli {

struct Resolution {
    std::string name;
    std::size_t width = 0;
    std::size_t height = 0;
};

/// "480p", "720p", "1080p", "2K", "4K" or "WxH".
Resolution parse_resolution(const std::string& text);

struct BenchConfig {
    std::vector<std::string> algorithms{"pst", "page", "vevid", "vevid-lite"};
    std::vector<Resolution> resolutions;
    std::size_t repetitions = 3;
    std::size_t warmup = 2;
    PstParams pst;
    PageParams page;
    VevidParams vevid;
    /// Optional source frame, resized to every resolution; synthetic otherwise.
    std::optional<Image> source;

    void validate() const;
};

struct BenchRecord {
    std::string algorithm;
    std::size_t width = 0;
    std::size_t height = 0;
    std::size_t frames = 0;
    double ms_mean = 0.0;
    double ms_std = 0.0;
    bool includes_colorspace = false;
};

/// Deterministic RGB test frame with smooth structure, edges and noise.
Image synthetic_frame(std::size_t width, std::size_t height, std::uint32_t seed = 7);

/// Warm-up runs fill kernel caches and are not timed; only the apply path of
/// preloaded frames is measured.
std::vector<BenchRecord> bench(const BenchConfig& config);

inline constexpr const char* kBenchCsvHeader = "algorithm,width,height,frames,ms_mean,ms_std,includes_colorspace";

void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records);

} // namespace phycv::cli
