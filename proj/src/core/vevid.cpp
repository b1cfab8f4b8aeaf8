#include <phycv/error.hpp>
#include <phycv/vevid.hpp>

#include <algorithm>
#include <cmath>
#include <string>

namespace phycv {
namespace {

double readout(double imag, double v, double gain) noexcept {
    return std::atan(gain * imag / std::max(v, kVevidEpsilon));
}

RealGrid readout_phase(const ComplexField& stretched, const RealGrid& channel, double gain) {
    RealGrid raw(channel.rows(), channel.cols());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        raw[i] = readout(stretched[i].imag(), channel[i], gain);
    }
    return raw;
}

ComplexField biased_spectrum(const RealGrid& channel, double bias) {
    RealGrid shifted(channel.rows(), channel.cols());
    for (std::size_t i = 0; i < shifted.size(); ++i) {
        shifted[i] = channel[i] + bias;
    }
    return forward_spectrum(shifted);
}

} // namespace

void VevidParams::validate() const {
    auto positive = [](double v, const char* name) {
        if (!(v > 0.0 && std::isfinite(v))) {
            throw InvalidParameter(std::string(name) + " must be > 0, got " + std::to_string(v));
        }
    };
    positive(strength, "strength");
    positive(variance, "variance");
    positive(bias, "bias");
    positive(gain, "gain");
}

PhaseKernel vevid_kernel(const FrequencyGrid& grid, double strength, double variance) {
    if (!(strength > 0.0) || !(variance > 0.0)) {
        throw InvalidParameter("VEViD kernel needs strength > 0 and variance > 0");
    }
    PhaseKernel kernel{RealGrid(grid.rows, grid.cols)};
    for (std::size_t i = 0; i < kernel.phi.size(); ++i) {
        const double rho = grid.rho[i];
        kernel.phi[i] = strength * std::exp(-rho * rho / variance);
    }
    return kernel;
}

double vevid_lite_transfer(double v, double gain, double bias) noexcept {
    return std::atan(-gain * (v + bias) / std::max(v, kVevidEpsilon));
}

RealGrid vevid_full_phase(const RealGrid& channel, const VevidParams& params, const FrequencyGrid& grid) {
    params.validate();
    if (grid.rows != channel.rows() || grid.cols != channel.cols()) {
        throw ShapeError("frequency grid does not match the channel");
    }
    const ComplexField transfer =
        transfer_function(vevid_kernel(grid, params.strength, params.variance), RealGrid(grid.rows, grid.cols, 1.0));
    return readout_phase(apply_transfer(biased_spectrum(channel, params.bias), transfer), channel, params.gain);
}

RealGrid vevid_lite_phase(const RealGrid& channel, const VevidParams& params) {
    params.validate();
    RealGrid raw(channel.rows(), channel.cols());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        raw[i] = vevid_lite_transfer(channel[i], params.gain, params.bias);
    }
    return raw;
}

std::optional<RealGrid> normalize_min_max(const RealGrid& raw, double flat_range) {
    if (raw.empty()) {
        return std::nullopt;
    }
    const auto [lo, hi] = std::minmax_element(raw.begin(), raw.end());
    const double min = *lo;
    const double range = *hi - min;
    if (!(range > flat_range)) {
        return std::nullopt;
    }
    RealGrid out(raw.rows(), raw.cols());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        out[i] = std::clamp((raw[i] - min) / range, 0.0, 1.0);
    }
    return out;
}

RealGrid vevid_full(const RealGrid& channel, const VevidParams& params, const FrequencyGrid& grid) {
    auto out = normalize_min_max(vevid_full_phase(channel, params, grid));
    return out ? std::move(*out) : RealGrid(channel.rows(), channel.cols(), 0.0);
}

RealGrid vevid_lite(const RealGrid& channel, const VevidParams& params) {
    auto out = normalize_min_max(vevid_lite_phase(channel, params));
    return out ? std::move(*out) : RealGrid(channel.rows(), channel.cols(), 0.0);
}

VevidEnhancer::VevidEnhancer(VevidParams params) : params_(params) {
    params_.validate();
}

std::shared_ptr<const ComplexField> VevidEnhancer::init_kernel(std::size_t rows, std::size_t cols) const {
    const auto key = std::make_pair(rows, cols);
    {
        std::lock_guard lock(cache_mutex_);
        if (auto it = cache_.find(key); it != cache_.end()) {
            return it->second;
        }
    }
    const FrequencyGrid grid = build_frequency_grid(rows, cols);
    auto transfer = std::make_shared<const ComplexField>(
        transfer_function(vevid_kernel(grid, params_.strength, params_.variance), RealGrid(rows, cols, 1.0)));
    std::lock_guard lock(cache_mutex_);
    return cache_.try_emplace(key, std::move(transfer)).first->second;
}

std::optional<RealGrid> VevidEnhancer::apply_kernel(const RealGrid& channel) const {
    if (params_.lite) {
        return normalize_min_max(vevid_lite_phase(channel, params_));
    }
    const auto transfer = init_kernel(channel.rows(), channel.cols());
    const ComplexField stretched = apply_transfer(biased_spectrum(channel, params_.bias), *transfer);
    return normalize_min_max(readout_phase(stretched, channel, params_.gain));
}

Image VevidEnhancer::run(const Image& image) const {
    validate_image(image);
    if (image.channels() == 1) {
        if (params_.channel == VevidChannel::saturation) {
            return image;
        }
        auto enhanced = apply_kernel(image.plane(0));
        return enhanced ? Image::from_plane(*enhanced) : image;
    }
    HsvImage hsv = rgb_to_hsv(image);
    RealGrid& target = params_.channel == VevidChannel::value ? hsv.v : hsv.s;
    if (auto enhanced = apply_kernel(target)) {
        target = std::move(*enhanced);
    }
    return hsv_to_rgb(hsv);
}

Image vevid_run(const Image& image, const VevidParams& params) {
    return VevidEnhancer(params).run(image);
}

} // namespace phycv
