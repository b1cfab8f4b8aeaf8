#include <phycv/cli/io.hpp>
#include <phycv/cli/runner.hpp>
#include <phycv/error.hpp>

#include <algorithm>
#include <optional>
#include <regex>
#include <string>
#include <variant>

namespace phycv::cli {
namespace {

namespace fs = std::filesystem;

template <class F>
void with_context(const std::string& context, F&& body) {
    try {
        body();
    } catch (const NotFound& e) {
        throw NotFound(context + ": " + e.what());
    } catch (const FormatError& e) {
        throw FormatError(context + ": " + e.what());
    } catch (const IoError& e) {
        throw IoError(context + ": " + e.what());
    } catch (const InvalidDimension& e) {
        throw InvalidDimension(context + ": " + e.what());
    } catch (const ShapeError& e) {
        throw ShapeError(context + ": " + e.what());
    } catch (const InvalidParameter& e) {
        throw InvalidParameter(context + ": " + e.what());
    }
}

fs::path with_suffix(const fs::path& path, const std::string& suffix) {
    fs::path out = path;
    out.replace_filename(path.stem().string() + suffix + ".png");
    return out;
}

class FrameProcessor {
public:
    explicit FrameProcessor(const RunConfig& config) : config_(config) {
        switch (config.algorithm) {
        case Algorithm::pst: pst_.emplace(config.pst); break;
        case Algorithm::page: page_.emplace(config.page); break;
        case Algorithm::vevid: vevid_.emplace(config.vevid); break;
        }
    }

    // `output` is a file, or for PAGE layers the directory that receives them.
    void process(const fs::path& input, const fs::path& output) const {
        const Image image = load_image(input);
        switch (config_.algorithm) {
        case Algorithm::pst: {
            const PstOutput result = pst_->run(image);
            if (const auto* edges = std::get_if<EdgeMap>(&result)) {
                save_image(edge_map_to_image(*edges), output);
            } else {
                save_image(phase_map_to_image(std::get<RealGrid>(result)), output);
            }
            break;
        }
        case Algorithm::page: {
            const DirectionalEdgeStack stack = page_->run(image);
            if (config_.page_layers) {
                fs::create_directories(output);
                const std::string stem = input.stem().string();
                for (std::size_t d = 0; d < stack.layers.size(); ++d) {
                    save_image(phase_map_to_image(stack.layers[d]),
                               output / (stem + "_theta" + std::to_string(d) + ".png"));
                }
            } else {
                save_image(page_visualize(stack, config_.page), output);
            }
            break;
        }
        case Algorithm::vevid: save_image(vevid_->run(image), output); break;
        }
    }

private:
    const RunConfig& config_;
    std::optional<PstDetector> pst_;
    std::optional<PageDetector> page_;
    std::optional<VevidEnhancer> vevid_;
};

} // namespace

std::vector<FrameFile> enumerate_frames(const fs::path& directory) {
    std::error_code ec;
    if (!fs::is_directory(directory, ec)) {
        throw NotFound("no such frame directory: " + directory.string());
    }
    static const std::regex pattern(R"(^.*?(\d+)\.(png|jpe?g|bmp)$)", std::regex::icase);
    std::vector<FrameFile> frames;
    for (const auto& entry : fs::directory_iterator(directory)) {
        if (!entry.is_regular_file()) {
            continue;
        }
        std::smatch match;
        const std::string name = entry.path().filename().string();
        if (std::regex_match(name, match, pattern)) {
            frames.push_back({entry.path(), std::stoll(match[1].str())});
        }
    }
    std::sort(frames.begin(), frames.end(), [](const FrameFile& a, const FrameFile& b) {
        return a.index != b.index ? a.index < b.index : a.path < b.path;
    });
    return frames;
}

void run(const RunConfig& config) {
    switch (config.algorithm) {
    case Algorithm::pst: config.pst.validate(); break;
    case Algorithm::page: config.page.validate(); break;
    case Algorithm::vevid: config.vevid.validate(); break;
    }
    const FrameProcessor processor(config);

    if (!config.frames_mode) {
        with_context(config.input.string(), [&] { processor.process(config.input, config.output); });
        return;
    }

    const auto frames = enumerate_frames(config.input);
    if (frames.empty()) {
        throw NotFound("no numbered frames in " + config.input.string());
    }
    std::error_code ec;
    fs::create_directories(config.output, ec);
    if (ec) {
        throw IoError("cannot create output directory " + config.output.string() + ": " + ec.message());
    }
    for (const FrameFile& frame : frames) {
        const fs::path target = config.algorithm == Algorithm::page && config.page_layers
                                    ? config.output
                                    : with_suffix(config.output / frame.path.filename(), "");
        with_context("frame " + frame.path.filename().string(), [&] { processor.process(frame.path, target); });
    }
}

} // namespace phycv::cli
