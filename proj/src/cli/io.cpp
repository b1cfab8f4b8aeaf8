#include <phycv/cli/io.hpp>
#include <phycv/error.hpp>

#include <opencv2/core.hpp>
#include <opencv2/imgcodecs.hpp>

#include <algorithm>
#include <cmath>
#include <system_error>

namespace phycv::cli {

Image load_image(const std::filesystem::path& path) {
    std::error_code ec;
    if (!std::filesystem::is_regular_file(path, ec)) {
        throw NotFound("no such image file: " + path.string());
    }
    cv::Mat mat = cv::imread(path.string(), cv::IMREAD_UNCHANGED);
    if (mat.empty()) {
        throw FormatError("cannot decode image: " + path.string());
    }
    double scale;
    switch (mat.depth()) {
    case CV_8U: scale = 1.0 / 255.0; break;
    case CV_16U: scale = 1.0 / 65535.0; break;
    default: throw FormatError("unsupported pixel depth in " + path.string());
    }

    const int src_channels = mat.channels();
    const std::size_t channels = src_channels == 1 ? 1 : 3;
    if (src_channels != 1 && src_channels != 3 && src_channels != 4) {
        throw FormatError("unsupported channel count in " + path.string());
    }
    if (mat.rows < 2 || mat.cols < 2) {
        throw InvalidDimension("image must be at least 2x2: " + path.string());
    }
    cv::Mat wide;
    mat.convertTo(wide, CV_MAKETYPE(CV_64F, src_channels), scale);

    Image image(static_cast<std::size_t>(mat.rows), static_cast<std::size_t>(mat.cols), channels);
    for (int r = 0; r < wide.rows; ++r) {
        const double* row = wide.ptr<double>(r);
        for (int c = 0; c < wide.cols; ++c) {
            const double* px = row + static_cast<std::ptrdiff_t>(c) * src_channels;
            const auto rr = static_cast<std::size_t>(r);
            const auto cc = static_cast<std::size_t>(c);
            if (channels == 1) {
                image.at(rr, cc) = px[0];
            } else {
                // OpenCV stores BGR(A).
                image.at(rr, cc, 0) = px[2];
                image.at(rr, cc, 1) = px[1];
                image.at(rr, cc, 2) = px[0];
            }
        }
    }
    return image;
}

std::uint8_t quantize(double value) noexcept {
    const double clamped = std::isnan(value) ? 0.0 : std::clamp(value, 0.0, 1.0);
    return static_cast<std::uint8_t>(std::floor(clamped * 255.0 + 0.5));
}

void save_image(const Image& image, const std::filesystem::path& path) {
    const int type = image.channels() == 1 ? CV_8UC1 : CV_8UC3;
    cv::Mat mat(static_cast<int>(image.rows()), static_cast<int>(image.cols()), type);
    for (std::size_t r = 0; r < image.rows(); ++r) {
        auto* row = mat.ptr<std::uint8_t>(static_cast<int>(r));
        for (std::size_t c = 0; c < image.cols(); ++c) {
            if (image.channels() == 1) {
                row[c] = quantize(image.at(r, c));
            } else {
                row[3 * c] = quantize(image.at(r, c, 2));
                row[3 * c + 1] = quantize(image.at(r, c, 1));
                row[3 * c + 2] = quantize(image.at(r, c, 0));
            }
        }
    }
    bool ok = false;
    try {
        ok = cv::imwrite(path.string(), mat);
    } catch (const cv::Exception&) {
        ok = false;
    }
    if (!ok) {
        throw IoError("cannot write image: " + path.string());
    }
}

Image phase_map_to_image(const RealGrid& map) {
    RealGrid gray(map.rows(), map.cols());
    for (std::size_t i = 0; i < map.size(); ++i) {
        gray[i] = 0.5 * (map[i] + 1.0);
    }
    return Image::from_plane(gray);
}

Image edge_map_to_image(const EdgeMap& edges) {
    RealGrid gray(edges.rows(), edges.cols());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        gray[i] = edges[i] ? 1.0 : 0.0;
    }
    return Image::from_plane(gray);
}

} // namespace phycv::cli
