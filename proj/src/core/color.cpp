#include <phycv/color.hpp>
#include <phycv/error.hpp>

#include <algorithm>
#include <cmath>

namespace phycv {

Hsv rgb_to_hsv(Rgb rgb) noexcept {
    const double max = std::max({rgb.r, rgb.g, rgb.b});
    const double min = std::min({rgb.r, rgb.g, rgb.b});
    const double delta = max - min;
    Hsv out{0.0, max > 0.0 ? delta / max : 0.0, max};
    if (delta <= 0.0) {
        return out;
    }
    double h;
    if (max == rgb.r) {
        h = (rgb.g - rgb.b) / delta;
    } else if (max == rgb.g) {
        h = 2.0 + (rgb.b - rgb.r) / delta;
    } else {
        h = 4.0 + (rgb.r - rgb.g) / delta;
    }
    h /= 6.0;
    if (h < 0.0) {
        h += 1.0;
    }
    out.h = h >= 1.0 ? 0.0 : h;
    return out;
}

Rgb hsv_to_rgb(Hsv hsv) noexcept {
    const double v = hsv.v;
    if (hsv.s <= 0.0) {
        return {v, v, v};
    }
    const double h6 = (hsv.h - std::floor(hsv.h)) * 6.0;
    const int sector = std::min(static_cast<int>(h6), 5);
    const double f = h6 - sector;
    const double p = v * (1.0 - hsv.s);
    const double q = v * (1.0 - hsv.s * f);
    const double t = v * (1.0 - hsv.s * (1.0 - f));
    switch (sector) {
    case 0: return {v, t, p};
    case 1: return {q, v, p};
    case 2: return {p, v, t};
    case 3: return {p, q, v};
    case 4: return {t, p, v};
    default: return {v, p, q};
    }
}

HsvImage rgb_to_hsv(const Image& rgb) {
    if (rgb.channels() != 3) {
        throw ShapeError("RGB to HSV conversion needs a 3-channel image");
    }
    HsvImage out{RealGrid(rgb.rows(), rgb.cols()), RealGrid(rgb.rows(), rgb.cols()),
                 RealGrid(rgb.rows(), rgb.cols())};
    const auto px = rgb.values();
    for (std::size_t i = 0; i < rgb.pixel_count(); ++i) {
        const Hsv hsv = rgb_to_hsv(Rgb{px[3 * i], px[3 * i + 1], px[3 * i + 2]});
        out.h[i] = hsv.h;
        out.s[i] = hsv.s;
        out.v[i] = hsv.v;
    }
    return out;
}

Image hsv_to_rgb(const HsvImage& hsv) {
    if (!hsv.h.same_shape(hsv.s) || !hsv.h.same_shape(hsv.v)) {
        throw ShapeError("HSV planes differ in shape");
    }
    Image out(hsv.rows(), hsv.cols(), 3);
    auto px = out.values();
    for (std::size_t i = 0; i < hsv.v.size(); ++i) {
        const Rgb rgb = hsv_to_rgb(Hsv{hsv.h[i], hsv.s[i], hsv.v[i]});
        px[3 * i] = rgb.r;
        px[3 * i + 1] = rgb.g;
        px[3 * i + 2] = rgb.b;
    }
    return out;
}

RealGrid to_luma(const Image& image) {
    if (image.channels() == 1) {
        return image.plane(0);
    }
    RealGrid out(image.rows(), image.cols());
    const auto px = image.values();
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = 0.299 * px[3 * i] + 0.587 * px[3 * i + 1] + 0.114 * px[3 * i + 2];
    }
    return out;
}

} // namespace phycv
