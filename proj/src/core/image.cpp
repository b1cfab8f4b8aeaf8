#include <phycv/error.hpp>
#include <phycv/image.hpp>

#include <algorithm>
#include <cmath>
#include <string>

namespace phycv {

Image::Image(std::size_t rows, std::size_t cols, std::size_t channels, double fill)
    : rows_(rows), cols_(cols), channels_(channels), values_(rows * cols * channels, fill) {
    if (channels != 1 && channels != 3) {
        throw InvalidDimension("image must have 1 or 3 channels, got " + std::to_string(channels));
    }
}

Image Image::from_plane(const RealGrid& plane) {
    Image image(plane.rows(), plane.cols(), 1);
    std::copy(plane.begin(), plane.end(), image.values_.begin());
    return image;
}

Image Image::from_planes(const RealGrid& r, const RealGrid& g, const RealGrid& b) {
    if (!r.same_shape(g) || !r.same_shape(b)) {
        throw ShapeError("color planes differ in shape");
    }
    Image image(r.rows(), r.cols(), 3);
    for (std::size_t i = 0; i < r.size(); ++i) {
        image.values_[3 * i] = r[i];
        image.values_[3 * i + 1] = g[i];
        image.values_[3 * i + 2] = b[i];
    }
    return image;
}

RealGrid Image::plane(std::size_t channel) const {
    if (channel >= channels_) {
        throw ShapeError("channel index " + std::to_string(channel) + " out of range");
    }
    RealGrid out(rows_, cols_);
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = values_[i * channels_ + channel];
    }
    return out;
}

void Image::set_plane(std::size_t channel, const RealGrid& plane) {
    if (channel >= channels_) {
        throw ShapeError("channel index " + std::to_string(channel) + " out of range");
    }
    if (plane.rows() != rows_ || plane.cols() != cols_) {
        throw ShapeError("plane shape does not match image");
    }
    for (std::size_t i = 0; i < plane.size(); ++i) {
        values_[i * channels_ + channel] = plane[i];
    }
}

void validate_image(const Image& image) {
    if (image.rows() < 2 || image.cols() < 2) {
        throw InvalidDimension("image must be at least 2x2, got " + std::to_string(image.rows()) + "x" +
                               std::to_string(image.cols()));
    }
    if (image.channels() != 1 && image.channels() != 3) {
        throw InvalidDimension("image must have 1 or 3 channels");
    }
    for (double v : image.values()) {
        if (!std::isfinite(v) || v < 0.0 || v > 1.0) {
            throw InvalidParameter("pixel values must lie in [0, 1]");
        }
    }
}

} // namespace phycv
