#pragma once

#include <phycv/grid.hpp>

#include <cstddef>

namespace phycv {

/// Thresholding and morphology applied to a normalized phase map.
struct PostprocessParams {
    double thresh_min = -1.0;  // in [-1, 0]; values strictly below mark edges
    double thresh_max = 0.8;   // in [0, 1]; values strictly above mark edges
    std::size_t min_component = 8;
    bool thin = true;

    void validate() const;
};

EdgeMap threshold_two_sided(const RealGrid& map, double thresh_min, double thresh_max);

/// Clears 8-connected components with fewer than `min_size` pixels.
void remove_small_components(EdgeMap& edges, std::size_t min_size);

/// Zhang-Suen iterative thinning; pixels outside the map count as background.
void thin(EdgeMap& edges);

EdgeMap postprocess(const RealGrid& normalized_map, const PostprocessParams& params);

} // namespace phycv
