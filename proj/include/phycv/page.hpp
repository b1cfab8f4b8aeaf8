#pragma once

// Phase-Stretch Adaptive Gradient-field Extractor: a bank of orientation
// selective phase kernels over rotated frequency coordinates.
//
// Orientation convention: the layer at angle theta responds to intensity
// variation along the rotated k'_n axis, i.e. along the direction
// (-sin theta, cos theta) in (column, row) image axes. theta = 0 picks up
// horizontal edges, theta = pi/2 vertical edges.

#include <phycv/grid.hpp>
#include <phycv/image.hpp>
#include <phycv/morphology.hpp>
#include <phycv/spectral.hpp>

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

namespace phycv {

struct PageParams {
    double mu1 = 0.0;      // center of the |k'_m| Gaussian
    double sigma1 = 0.05;
    double s1 = 0.8;
    double mu2 = 0.35;     // log-domain center of the |k'_n| log-normal
    double sigma2 = 0.8;
    double s2 = 0.8;
    std::size_t directions = 8;
    LowpassSpec lowpass{0.1, true};
    PostprocessParams post{-0.6, 0.6, 8, false};

    void validate() const;
};

struct RotatedCoords {
    RealGrid km;
    RealGrid kn;
};

RotatedCoords rotate_frequency_coords(const FrequencyGrid& grid, double theta);

double page_phi1(double k, const PageParams& params) noexcept;
/// Log-normal profile; 0 at k = 0.
double page_phi2(double k, const PageParams& params) noexcept;

PhaseKernel page_kernel(const FrequencyGrid& grid, double theta, const PageParams& params);

/// theta_d = d * pi / D for d in [0, D).
std::vector<double> page_thetas(std::size_t directions);

struct DirectionalEdgeStack {
    std::vector<RealGrid> layers;  // normalized phase per direction, in [-1, 1]
    std::vector<double> thetas;

    std::size_t rows() const noexcept { return layers.empty() ? 0 : layers.front().rows(); }
    std::size_t cols() const noexcept { return layers.empty() ? 0 : layers.front().cols(); }
};

/// Cached kernel bank plus low-pass for one frame shape.
struct PageKernelBank {
    std::vector<PhaseKernel> kernels;
    RealGrid lowpass;
};

class PageDetector {
public:
    explicit PageDetector(PageParams params);

    const PageParams& params() const noexcept { return params_; }

    std::shared_ptr<const PageKernelBank> init_kernel(std::size_t rows, std::size_t cols) const;

    /// One forward transform shared by every direction.
    DirectionalEdgeStack apply_kernel(const RealGrid& frame) const;

    DirectionalEdgeStack run(const Image& image) const;

private:
    PageParams params_;
    mutable std::mutex cache_mutex_;
    mutable std::map<std::pair<std::size_t, std::size_t>, std::shared_ptr<const PageKernelBank>> cache_;
};

DirectionalEdgeStack page_run(const Image& image, const PageParams& params);

/// Hue-coded direction map: hue = theta of the strongest layer / pi, value =
/// that layer's |response| where its post-processed edge map is set.
Image page_visualize(const DirectionalEdgeStack& stack, const PageParams& params);

} // namespace phycv
