#pragma once

// Vision Enhancement via Virtual diffraction and coherent Detection:
// low-light (value channel) and color (saturation channel) enhancement.

#include <phycv/color.hpp>
#include <phycv/grid.hpp>
#include <phycv/image.hpp>
#include <phycv/spectral.hpp>

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>

namespace phycv {

enum class VevidChannel { value, saturation };

struct VevidParams {
    double strength = 0.3;    // S, radians
    double variance = 0.002;  // T, squared cycles/sample
    double bias = 0.16;       // b
    double gain = 1.4;        // G
    VevidChannel channel = VevidChannel::value;
    bool lite = false;

    void validate() const;
};

/// Guard for the pixel value in the read-out denominator.
inline constexpr double kVevidEpsilon = 1e-8;
/// Raw phase ranges at or below this are treated as constant frames.
inline constexpr double kVevidFlatRange = 1e-6;

PhaseKernel vevid_kernel(const FrequencyGrid& grid, double strength, double variance);

/// atan(-G (v + b) / max(v, eps)).
double vevid_lite_transfer(double v, double gain, double bias) noexcept;

/// Raw read-out phase, radians.
RealGrid vevid_full_phase(const RealGrid& channel, const VevidParams& params, const FrequencyGrid& grid);
RealGrid vevid_lite_phase(const RealGrid& channel, const VevidParams& params);

/// Affine min-max map into [0, 1]; nullopt for a (numerically) constant frame.
std::optional<RealGrid> normalize_min_max(const RealGrid& raw, double flat_range = kVevidFlatRange);

/// Enhanced channel in [0, 1]; a constant raw frame maps to all zeros.
RealGrid vevid_full(const RealGrid& channel, const VevidParams& params, const FrequencyGrid& grid);
RealGrid vevid_lite(const RealGrid& channel, const VevidParams& params);

class VevidEnhancer {
public:
    explicit VevidEnhancer(VevidParams params);

    const VevidParams& params() const noexcept { return params_; }

    std::shared_ptr<const ComplexField> init_kernel(std::size_t rows, std::size_t cols) const;

    /// Enhances one channel; nullopt when the read-out is constant.
    std::optional<RealGrid> apply_kernel(const RealGrid& channel) const;

    /// RGB in, RGB out. The selected HSV channel is replaced; when the
    /// read-out is constant the channel is passed through unchanged.
    /// Single-channel input is treated as the value channel with zero saturation.
    Image run(const Image& image) const;

private:
    VevidParams params_;
    mutable std::mutex cache_mutex_;
    mutable std::map<std::pair<std::size_t, std::size_t>, std::shared_ptr<const ComplexField>> cache_;
};

Image vevid_run(const Image& image, const VevidParams& params);

} // namespace phycv
