#include <phycv/error.hpp>
#include <phycv/spectral.hpp>

#include "fft.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace phycv {
namespace {

void require_same_shape(const RealGrid& image, const PhaseKernel& kernel, const RealGrid& lowpass) {
    if (!image.same_shape(kernel.phi) || !image.same_shape(lowpass)) {
        throw ShapeError("image, kernel and low-pass shapes differ");
    }
}

// amplitude * exp(-i * phase); amplitude may be any real value.
std::complex<double> kernel_factor(double amplitude, double phase) noexcept {
    return {amplitude * std::cos(phase), -amplitude * std::sin(phase)};
}

void inverse_inplace(ComplexField& field) {
    detail::fft2d_inplace(field.data(), field.rows(), field.cols(), detail::FftDirection::inverse);
    const double scale = 1.0 / static_cast<double>(field.size());
    for (auto& z : field) {
        z *= scale;
    }
}

} // namespace

void LowpassSpec::validate() const {
    if (enabled && !(sigma > 0.0 && std::isfinite(sigma))) {
        throw InvalidParameter("sigma-lp must be > 0, got " + std::to_string(sigma));
    }
}

double dft_frequency(std::size_t bin, std::size_t n) noexcept {
    const auto b = static_cast<double>(bin);
    const auto len = static_cast<double>(n);
    return bin < (n + 1) / 2 ? b / len : (b - len) / len;
}

FrequencyGrid build_frequency_grid(std::size_t rows, std::size_t cols) {
    if (rows < 2 || cols < 2) {
        throw InvalidDimension("frequency grid needs rows, cols >= 2, got " + std::to_string(rows) + "x" +
                               std::to_string(cols));
    }
    FrequencyGrid grid{rows, cols, RealGrid(rows, cols), RealGrid(rows, cols), RealGrid(rows, cols), 0.0};
    for (std::size_t r = 0; r < rows; ++r) {
        const double kn = dft_frequency(r, rows);
        for (std::size_t c = 0; c < cols; ++c) {
            const double km = dft_frequency(c, cols);
            grid.km(r, c) = km;
            grid.kn(r, c) = kn;
            grid.rho(r, c) = std::hypot(km, kn);
        }
    }
    grid.rho_max = *std::max_element(grid.rho.begin(), grid.rho.end());
    return grid;
}

RealGrid gaussian_lowpass(const FrequencyGrid& grid, const LowpassSpec& spec) {
    spec.validate();
    RealGrid out(grid.rows, grid.cols, 1.0);
    if (!spec.enabled) {
        return out;
    }
    const double denom = 2.0 * spec.sigma * spec.sigma;
    for (std::size_t i = 0; i < out.size(); ++i) {
        const double rho = grid.rho[i];
        out[i] = std::exp(-rho * rho / denom);
    }
    return out;
}

ComplexField forward_spectrum(const RealGrid& image) {
    ComplexField spectrum(image.rows(), image.cols());
    std::copy(image.begin(), image.end(), spectrum.begin());
    detail::fft2d_inplace(spectrum.data(), spectrum.rows(), spectrum.cols(), detail::FftDirection::forward);
    return spectrum;
}

ComplexField transfer_function(const PhaseKernel& kernel, const RealGrid& lowpass) {
    if (!kernel.phi.same_shape(lowpass)) {
        throw ShapeError("kernel and low-pass shapes differ");
    }
    ComplexField transfer(kernel.rows(), kernel.cols());
    for (std::size_t i = 0; i < transfer.size(); ++i) {
        transfer[i] = kernel_factor(lowpass[i], kernel.phi[i]);
    }
    return transfer;
}

ComplexField apply_transfer(const ComplexField& spectrum, const ComplexField& transfer) {
    if (!spectrum.same_shape(transfer)) {
        throw ShapeError("spectrum and transfer function shapes differ");
    }
    ComplexField out(spectrum.rows(), spectrum.cols());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = spectrum[i] * transfer[i];
    }
    inverse_inplace(out);
    return out;
}

ComplexField apply_kernel_to_spectrum(const ComplexField& spectrum, const PhaseKernel& kernel,
                                      const RealGrid& lowpass) {
    if (!spectrum.same_shape(kernel.phi) || !spectrum.same_shape(lowpass)) {
        throw ShapeError("spectrum, kernel and low-pass shapes differ");
    }
    ComplexField out(spectrum.rows(), spectrum.cols());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = spectrum[i] * kernel_factor(lowpass[i], kernel.phi[i]);
    }
    inverse_inplace(out);
    return out;
}

ComplexField apply_stretch_2d(const RealGrid& image, const PhaseKernel& kernel, const RealGrid& lowpass) {
    require_same_shape(image, kernel, lowpass);
    return apply_kernel_to_spectrum(forward_spectrum(image), kernel, lowpass);
}

std::vector<std::complex<double>> apply_stretch_1d(std::span<const double> signal,
                                                   std::span<const double> phase,
                                                   std::span<const double> amplitude) {
    if (signal.size() != phase.size() || signal.size() != amplitude.size()) {
        throw ShapeError("signal, phase and amplitude lengths differ");
    }
    if (signal.size() < 2) {
        throw InvalidDimension("signal length must be >= 2");
    }
    ComplexField buffer(1, signal.size());
    std::copy(signal.begin(), signal.end(), buffer.begin());
    detail::fft2d_inplace(buffer.data(), 1, buffer.cols(), detail::FftDirection::forward);
    for (std::size_t i = 0; i < buffer.size(); ++i) {
        buffer[i] *= kernel_factor(amplitude[i], phase[i]);
    }
    inverse_inplace(buffer);
    return {buffer.begin(), buffer.end()};
}

double phase_angle(std::complex<double> z) noexcept {
    if (z.real() == 0.0 && z.imag() == 0.0) {
        return 0.0;
    }
    const double angle = std::atan2(z.imag(), z.real());
    // atan2 returns -pi for (-x, -0.0); fold onto the half-open range.
    return angle == -std::numbers::pi ? std::numbers::pi : angle;
}

RealGrid phase_of(const ComplexField& field) {
    RealGrid out(field.rows(), field.cols());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = phase_angle(field[i]);
    }
    return out;
}

RealGrid normalize_max_abs(const RealGrid& raw, double floor) {
    double peak = 0.0;
    for (double v : raw) {
        peak = std::max(peak, std::abs(v));
    }
    RealGrid out(raw.rows(), raw.cols(), 0.0);
    if (peak <= floor) {
        return out;
    }
    for (std::size_t i = 0; i < raw.size(); ++i) {
        out[i] = raw[i] / peak;
    }
    return out;
}

} // namespace phycv
