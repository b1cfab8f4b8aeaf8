#include <phycv/color.hpp>
#include <phycv/error.hpp>
#include <phycv/pst.hpp>

#include <algorithm>
#include <cmath>
#include <string>

namespace phycv {
namespace {

// Antiderivative of atan: x atan(x) - ln(1 + x^2) / 2.
double atan_integral(double x) noexcept {
    return x * std::atan(x) - 0.5 * std::log1p(x * x);
}

} // namespace

void PstParams::validate() const {
    if (!(strength > 0.0 && std::isfinite(strength))) {
        throw InvalidParameter("strength must be > 0, got " + std::to_string(strength));
    }
    if (!(warp > 0.0 && std::isfinite(warp))) {
        throw InvalidParameter("warp must be > 0, got " + std::to_string(warp));
    }
    lowpass.validate();
    post.validate();
}

double pst_phase_profile(double r, double r_max, double strength, double warp) {
    if (!(r_max > 0.0) || !(warp * r_max > 0.0)) {
        throw InvalidParameter("PST profile needs r_max > 0 and warp * r_max > 0");
    }
    return strength * atan_integral(warp * r) / atan_integral(warp * r_max);
}

PhaseKernel pst_kernel(const FrequencyGrid& grid, const PstParams& params) {
    params.validate();
    PhaseKernel kernel{RealGrid(grid.rows, grid.cols)};
    const double denom = atan_integral(params.warp * grid.rho_max);
    for (std::size_t i = 0; i < kernel.phi.size(); ++i) {
        kernel.phi[i] = params.strength * atan_integral(params.warp * grid.rho[i]) / denom;
    }
    return kernel;
}

RealGrid pst_phase(const RealGrid& image, const PstParams& params) {
    const FrequencyGrid grid = build_frequency_grid(image.rows(), image.cols());
    return phase_of(apply_stretch_2d(image, pst_kernel(grid, params), gaussian_lowpass(grid, params.lowpass)));
}

RealGrid pst_analog(const RealGrid& image, const PstParams& params) {
    return normalize_max_abs(pst_phase(image, params));
}

EdgeMap pst_postprocess(const RealGrid& phase_map, const PstParams& params) {
    return postprocess(phase_map, params.post);
}

PstDetector::PstDetector(PstParams params) : params_(params) {
    params_.validate();
}

std::shared_ptr<const ComplexField> PstDetector::init_kernel(std::size_t rows, std::size_t cols) const {
    const auto key = std::make_pair(rows, cols);
    {
        std::lock_guard lock(cache_mutex_);
        if (auto it = cache_.find(key); it != cache_.end()) {
            return it->second;
        }
    }
    const FrequencyGrid grid = build_frequency_grid(rows, cols);
    auto transfer = std::make_shared<const ComplexField>(
        transfer_function(pst_kernel(grid, params_), gaussian_lowpass(grid, params_.lowpass)));
    std::lock_guard lock(cache_mutex_);
    return cache_.try_emplace(key, std::move(transfer)).first->second;
}

RealGrid PstDetector::apply_kernel(const RealGrid& frame) const {
    const auto transfer = init_kernel(frame.rows(), frame.cols());
    return normalize_max_abs(phase_of(apply_transfer(forward_spectrum(frame), *transfer)));
}

PstOutput PstDetector::run(const Image& image) const {
    validate_image(image);
    RealGrid analog = apply_kernel(to_luma(image));
    if (!params_.digital_output) {
        return analog;
    }
    return pst_postprocess(analog, params_);
}

PstOutput pst_run(const Image& image, const PstParams& params) {
    return PstDetector(params).run(image);
}

} // namespace phycv
