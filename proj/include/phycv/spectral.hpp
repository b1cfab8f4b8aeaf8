#pragma once

// Shared spectral substrate: frequency grids, the discrete stretch operator
// and coherent (phase) detection.
//
// Frequencies are normalized (cycles/sample) and stored in unshifted DFT bin
// order, so kernels multiply spectra directly. `km` is the frequency along
// the column axis (spacing 1/cols), `kn` along the row axis (spacing 1/rows).
// The forward DFT is unnormalized; the inverse divides by rows*cols.

#include <phycv/grid.hpp>

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace phycv {

struct FrequencyGrid {
    std::size_t rows = 0;
    std::size_t cols = 0;
    RealGrid km;
    RealGrid kn;
    RealGrid rho;
    double rho_max = 0.0;
};

/// Real phase kernel phi; the applied multiplier is exp(-i*phi).
struct PhaseKernel {
    RealGrid phi;

    std::size_t rows() const noexcept { return phi.rows(); }
    std::size_t cols() const noexcept { return phi.cols(); }
};

struct LowpassSpec {
    double sigma = 0.15;
    bool enabled = true;

    void validate() const;
};

/// Normalized frequency of DFT bin `bin` of an `n`-point transform, in [-0.5, 0.5).
double dft_frequency(std::size_t bin, std::size_t n) noexcept;

FrequencyGrid build_frequency_grid(std::size_t rows, std::size_t cols);

/// exp(-rho^2 / (2 sigma^2)) per bin, or all ones when disabled.
RealGrid gaussian_lowpass(const FrequencyGrid& grid, const LowpassSpec& spec);

ComplexField apply_stretch_2d(const RealGrid& image, const PhaseKernel& kernel, const RealGrid& lowpass);

std::vector<std::complex<double>> apply_stretch_1d(std::span<const double> signal,
                                                   std::span<const double> phase,
                                                   std::span<const double> amplitude);

/// Principal argument in (-pi, pi]; arg(0) is 0.
double phase_angle(std::complex<double> z) noexcept;
RealGrid phase_of(const ComplexField& field);

/// Raw phase divided by its max absolute value; maps below `floor` become zero.
RealGrid normalize_max_abs(const RealGrid& raw, double floor = 1e-12);

// Pieces of the stretch operator, exposed so callers can hoist the forward
// transform or precompute the spectral multiplier.

ComplexField forward_spectrum(const RealGrid& image);

/// Spectral multiplier exp(-i*phi) * lowpass for one kernel.
ComplexField transfer_function(const PhaseKernel& kernel, const RealGrid& lowpass);

/// Inverse DFT of spectrum * transfer.
ComplexField apply_transfer(const ComplexField& spectrum, const ComplexField& transfer);

/// Inverse DFT of spectrum * exp(-i*phi) * lowpass, without materializing the multiplier.
ComplexField apply_kernel_to_spectrum(const ComplexField& spectrum, const PhaseKernel& kernel,
                                      const RealGrid& lowpass);

} // namespace phycv
