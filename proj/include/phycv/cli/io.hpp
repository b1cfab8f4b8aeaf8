#pragma once

#include <phycv/grid.hpp>
#include <phycv/image.hpp>

#include <cstdint>
#include <filesystem>

namespace phycv::cli {

/// Decodes PNG/JPEG/BMP into [0, 1] (8-bit v -> v/255, 16-bit v -> v/65535).
/// Alpha is dropped; color images come back as RGB.
Image load_image(const std::filesystem::path& path);

/// Clamp to [0, 1], then round half up to 8 bits.
std::uint8_t quantize(double value) noexcept;

/// Writes an 8-bit PNG.
void save_image(const Image& image, const std::filesystem::path& path);

/// Maps a [-1, 1] phase map to [0, 1] gray.
Image phase_map_to_image(const RealGrid& map);
Image edge_map_to_image(const EdgeMap& edges);

} // namespace phycv::cli
