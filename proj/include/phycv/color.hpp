#pragma once

#include <phycv/grid.hpp>
#include <phycv/image.hpp>

namespace phycv {

struct Rgb {
    double r = 0, g = 0, b = 0;
};

/// Hexcone HSV; h in [0, 1), s and v in [0, 1]. Gray pixels get h = 0.
struct Hsv {
    double h = 0, s = 0, v = 0;
};

Hsv rgb_to_hsv(Rgb rgb) noexcept;
Rgb hsv_to_rgb(Hsv hsv) noexcept;

struct HsvImage {
    RealGrid h;
    RealGrid s;
    RealGrid v;

    std::size_t rows() const noexcept { return v.rows(); }
    std::size_t cols() const noexcept { return v.cols(); }
};

HsvImage rgb_to_hsv(const Image& rgb);
Image hsv_to_rgb(const HsvImage& hsv);

/// Rec. 601 luma (0.299, 0.587, 0.114); single-channel images pass through.
RealGrid to_luma(const Image& image);

} // namespace phycv
