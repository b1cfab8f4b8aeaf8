#include <phycv/color.hpp>
#include <phycv/error.hpp>
#include <phycv/page.hpp>
#include <phycv/pst.hpp>

#include <cmath>
#include <numbers>
#include <string>

namespace phycv {
namespace {

const double kInvSqrt2Pi = 1.0 / std::sqrt(2.0 * std::numbers::pi);

} // namespace

void PageParams::validate() const {
    if (!(sigma1 > 0.0) || !(sigma2 > 0.0)) {
        throw InvalidParameter("sigma1 and sigma2 must be > 0");
    }
    if (!(s1 > 0.0) || !(s2 > 0.0)) {
        throw InvalidParameter("s1 and s2 must be > 0");
    }
    if (!(mu1 >= 0.0) || !std::isfinite(mu1) || !std::isfinite(mu2)) {
        throw InvalidParameter("mu1 must be >= 0 and mu2 finite");
    }
    if (directions < 1) {
        throw InvalidParameter("directions must be >= 1");
    }
    lowpass.validate();
    post.validate();
}

RotatedCoords rotate_frequency_coords(const FrequencyGrid& grid, double theta) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    RotatedCoords out{RealGrid(grid.rows, grid.cols), RealGrid(grid.rows, grid.cols)};
    for (std::size_t i = 0; i < out.km.size(); ++i) {
        out.km[i] = grid.km[i] * c + grid.kn[i] * s;
        out.kn[i] = -grid.km[i] * s + grid.kn[i] * c;
    }
    return out;
}

double page_phi1(double k, const PageParams& params) noexcept {
    const double d = std::abs(k) - params.mu1;
    return params.s1 * kInvSqrt2Pi / params.sigma1 * std::exp(-d * d / (2.0 * params.sigma1 * params.sigma1));
}

double page_phi2(double k, const PageParams& params) noexcept {
    const double a = std::abs(k);
    if (a == 0.0) {
        return 0.0;
    }
    // Evaluated in log space so 1/|k| cannot overflow against the vanishing exponential.
    const double log_k = std::log(a);
    const double d = log_k - params.mu2;
    return std::exp(std::log(params.s2 * kInvSqrt2Pi / params.sigma2) - log_k -
                    d * d / (2.0 * params.sigma2 * params.sigma2));
}

PhaseKernel page_kernel(const FrequencyGrid& grid, double theta, const PageParams& params) {
    const RotatedCoords coords = rotate_frequency_coords(grid, theta);
    PhaseKernel kernel{RealGrid(grid.rows, grid.cols)};
    for (std::size_t i = 0; i < kernel.phi.size(); ++i) {
        kernel.phi[i] = page_phi1(coords.km[i], params) * page_phi2(coords.kn[i], params);
    }
    return kernel;
}

std::vector<double> page_thetas(std::size_t directions) {
    std::vector<double> thetas(directions);
    for (std::size_t d = 0; d < directions; ++d) {
        thetas[d] = static_cast<double>(d) * std::numbers::pi / static_cast<double>(directions);
    }
    return thetas;
}

PageDetector::PageDetector(PageParams params) : params_(params) {
    params_.validate();
}

std::shared_ptr<const PageKernelBank> PageDetector::init_kernel(std::size_t rows, std::size_t cols) const {
    const auto key = std::make_pair(rows, cols);
    {
        std::lock_guard lock(cache_mutex_);
        if (auto it = cache_.find(key); it != cache_.end()) {
            return it->second;
        }
    }
    const FrequencyGrid grid = build_frequency_grid(rows, cols);
    auto bank = std::make_shared<PageKernelBank>();
    for (double theta : page_thetas(params_.directions)) {
        bank->kernels.push_back(page_kernel(grid, theta, params_));
    }
    bank->lowpass = gaussian_lowpass(grid, params_.lowpass);
    std::lock_guard lock(cache_mutex_);
    return cache_.try_emplace(key, std::move(bank)).first->second;
}

DirectionalEdgeStack PageDetector::apply_kernel(const RealGrid& frame) const {
    const auto bank = init_kernel(frame.rows(), frame.cols());
    const ComplexField spectrum = forward_spectrum(frame);
    DirectionalEdgeStack stack;
    stack.thetas = page_thetas(params_.directions);
    stack.layers.reserve(bank->kernels.size());
    for (const PhaseKernel& kernel : bank->kernels) {
        stack.layers.push_back(normalize_max_abs(phase_of(apply_kernel_to_spectrum(spectrum, kernel, bank->lowpass))));
    }
    return stack;
}

DirectionalEdgeStack PageDetector::run(const Image& image) const {
    validate_image(image);
    return apply_kernel(to_luma(image));
}

DirectionalEdgeStack page_run(const Image& image, const PageParams& params) {
    return PageDetector(params).run(image);
}

Image page_visualize(const DirectionalEdgeStack& stack, const PageParams& params) {
    if (stack.layers.empty() || stack.layers.size() != stack.thetas.size()) {
        throw ShapeError("directional stack needs one theta per layer");
    }
    const std::size_t rows = stack.rows();
    const std::size_t cols = stack.cols();
    std::vector<EdgeMap> edges;
    edges.reserve(stack.layers.size());
    for (const RealGrid& layer : stack.layers) {
        if (layer.rows() != rows || layer.cols() != cols) {
            throw ShapeError("directional layers differ in shape");
        }
        edges.push_back(postprocess(layer, params.post));
    }

    HsvImage hsv{RealGrid(rows, cols), RealGrid(rows, cols, 1.0), RealGrid(rows, cols)};
    for (std::size_t i = 0; i < rows * cols; ++i) {
        std::size_t best = 0;
        double best_mag = std::abs(stack.layers[0][i]);
        for (std::size_t d = 1; d < stack.layers.size(); ++d) {
            const double mag = std::abs(stack.layers[d][i]);
            if (mag > best_mag) {
                best = d;
                best_mag = mag;
            }
        }
        const double hue = stack.thetas[best] / std::numbers::pi;
        hsv.h[i] = hue - std::floor(hue);
        hsv.v[i] = edges[best][i] ? std::min(best_mag, 1.0) : 0.0;
    }
    return hsv_to_rgb(hsv);
}

} // namespace phycv
