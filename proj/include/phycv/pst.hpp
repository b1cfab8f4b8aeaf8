#pragma once

// Phase-Stretch Transform: edge and texture detection with a radially
// symmetric phase kernel whose derivative is arctan-shaped.

#include <phycv/grid.hpp>
#include <phycv/image.hpp>
#include <phycv/morphology.hpp>
#include <phycv/spectral.hpp>

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <variant>

namespace phycv {

struct PstParams {
    double strength = 0.3;  // S: phase at the corner frequency, radians
    double warp = 15.0;     // W
    LowpassSpec lowpass{0.15, true};
    PostprocessParams post{-1.0, 0.8, 8, true};
    bool digital_output = false;

    void validate() const;
};

/// S * (Wr atan(Wr) - ln(1 + (Wr)^2)/2) / (same at r_max).
double pst_phase_profile(double r, double r_max, double strength, double warp);

PhaseKernel pst_kernel(const FrequencyGrid& grid, const PstParams& params);

/// Raw detected phase in radians, before normalization.
RealGrid pst_phase(const RealGrid& image, const PstParams& params);

/// Normalized analog phase map in [-1, 1].
RealGrid pst_analog(const RealGrid& image, const PstParams& params);

EdgeMap pst_postprocess(const RealGrid& phase_map, const PstParams& params);

using PstOutput = std::variant<RealGrid, EdgeMap>;

/// Load / init-kernel / apply-kernel pipeline with a per-shape kernel cache.
/// Safe to share between threads.
class PstDetector {
public:
    explicit PstDetector(PstParams params);

    const PstParams& params() const noexcept { return params_; }

    /// Spectral multiplier for a frame shape; built once per shape.
    std::shared_ptr<const ComplexField> init_kernel(std::size_t rows, std::size_t cols) const;

    /// Normalized analog phase of a single-channel frame.
    RealGrid apply_kernel(const RealGrid& frame) const;

    /// Full pipeline; color input is reduced to luma first.
    PstOutput run(const Image& image) const;

private:
    PstParams params_;
    mutable std::mutex cache_mutex_;
    mutable std::map<std::pair<std::size_t, std::size_t>, std::shared_ptr<const ComplexField>> cache_;
};

PstOutput pst_run(const Image& image, const PstParams& params);

} // namespace phycv
