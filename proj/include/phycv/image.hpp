#pragma once

#include <phycv/grid.hpp>

#include <cstddef>
#include <span>
#include <vector>

namespace phycv {

/// Interleaved 1- or 3-channel image with intensities in [0, 1].
/// Three-channel images are RGB.
class Image {
public:
    Image() = default;
    Image(std::size_t rows, std::size_t cols, std::size_t channels, double fill = 0.0);

    static Image from_plane(const RealGrid& plane);
    static Image from_planes(const RealGrid& r, const RealGrid& g, const RealGrid& b);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t channels() const noexcept { return channels_; }
    std::size_t pixel_count() const noexcept { return rows_ * cols_; }

    double& at(std::size_t r, std::size_t c, std::size_t ch = 0) noexcept {
        return values_[(r * cols_ + c) * channels_ + ch];
    }
    double at(std::size_t r, std::size_t c, std::size_t ch = 0) const noexcept {
        return values_[(r * cols_ + c) * channels_ + ch];
    }

    std::span<double> values() noexcept { return values_; }
    std::span<const double> values() const noexcept { return values_; }

    RealGrid plane(std::size_t channel) const;
    void set_plane(std::size_t channel, const RealGrid& plane);

    bool operator==(const Image&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t channels_ = 0;
    std::vector<double> values_;
};

/// Throws InvalidDimension / InvalidParameter unless the image satisfies the
/// ingestion invariants: rows, cols >= 2, 1 or 3 channels, finite values in [0, 1].
void validate_image(const Image& image);

} // namespace phycv
