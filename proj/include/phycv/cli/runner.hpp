#pragma once

#include <phycv/page.hpp>
#include <phycv/pst.hpp>
#include <phycv/vevid.hpp>

#include <filesystem>
#include <string>
#include <vector>

namespace phycv::cli {

enum class Algorithm { pst, page, vevid };

struct RunConfig {
    Algorithm algorithm = Algorithm::pst;
    std::filesystem::path input;
    std::filesystem::path output;
    PstParams pst;
    PageParams page;
    VevidParams vevid;
    /// Input and output are directories of numbered frames.
    bool frames_mode = false;
    /// PAGE only: write one image per direction instead of the hue map.
    bool page_layers = false;
};

struct FrameFile {
    std::filesystem::path path;
    long long index = 0;
};

/// Numbered image files (e.g. frame_0007.png) in a directory, ordered by number.
std::vector<FrameFile> enumerate_frames(const std::filesystem::path& directory);

/// Processes one image or every frame. Errors carry file context and keep
/// their original type.
void run(const RunConfig& config);

} // namespace phycv::cli
