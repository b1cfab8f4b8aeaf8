#pragma once

#include <complex>
#include <cstddef>

namespace phycv::detail {

enum class FftDirection { forward, inverse };

/// Unnormalized in-place 2D DFT of a row-major rows x cols buffer. The buffer
/// must be 64-byte aligned (every Grid is). Plans are cached per shape and
/// shared across threads.
void fft2d_inplace(std::complex<double>* data, std::size_t rows, std::size_t cols, FftDirection direction);

} // namespace phycv::detail
