#include <phycv/error.hpp>
#include <phycv/morphology.hpp>

#include <array>
#include <cmath>
#include <string>
#include <vector>

namespace phycv {

void PostprocessParams::validate() const {
    if (!(thresh_min >= -1.0 && thresh_min <= 0.0)) {
        throw InvalidParameter("thresh-min must lie in [-1, 0], got " + std::to_string(thresh_min));
    }
    if (!(thresh_max >= 0.0 && thresh_max <= 1.0)) {
        throw InvalidParameter("thresh-max must lie in [0, 1], got " + std::to_string(thresh_max));
    }
}

EdgeMap threshold_two_sided(const RealGrid& map, double thresh_min, double thresh_max) {
    EdgeMap edges(map.rows(), map.cols());
    for (std::size_t i = 0; i < map.size(); ++i) {
        edges[i] = (map[i] > thresh_max || map[i] < thresh_min) ? 1 : 0;
    }
    return edges;
}

void remove_small_components(EdgeMap& edges, std::size_t min_size) {
    if (min_size <= 1) {
        return;
    }
    const std::size_t rows = edges.rows();
    const std::size_t cols = edges.cols();
    std::vector<std::uint8_t> visited(edges.size(), 0);
    std::vector<std::size_t> component;
    std::vector<std::size_t> stack;

    for (std::size_t seed = 0; seed < edges.size(); ++seed) {
        if (!edges[seed] || visited[seed]) {
            continue;
        }
        component.clear();
        stack.assign(1, seed);
        visited[seed] = 1;
        while (!stack.empty()) {
            const std::size_t idx = stack.back();
            stack.pop_back();
            component.push_back(idx);
            const std::size_t r = idx / cols;
            const std::size_t c = idx % cols;
            for (int dr = -1; dr <= 1; ++dr) {
                for (int dc = -1; dc <= 1; ++dc) {
                    if (dr == 0 && dc == 0) {
                        continue;
                    }
                    const auto nr = static_cast<std::ptrdiff_t>(r) + dr;
                    const auto nc = static_cast<std::ptrdiff_t>(c) + dc;
                    if (nr < 0 || nc < 0 || nr >= static_cast<std::ptrdiff_t>(rows) ||
                        nc >= static_cast<std::ptrdiff_t>(cols)) {
                        continue;
                    }
                    const std::size_t n = static_cast<std::size_t>(nr) * cols + static_cast<std::size_t>(nc);
                    if (edges[n] && !visited[n]) {
                        visited[n] = 1;
                        stack.push_back(n);
                    }
                }
            }
        }
        if (component.size() < min_size) {
            for (std::size_t idx : component) {
                edges[idx] = 0;
            }
        }
    }
}

void thin(EdgeMap& edges) {
    const auto rows = static_cast<std::ptrdiff_t>(edges.rows());
    const auto cols = static_cast<std::ptrdiff_t>(edges.cols());
    auto pixel = [&](std::ptrdiff_t r, std::ptrdiff_t c) -> int {
        if (r < 0 || c < 0 || r >= rows || c >= cols) {
            return 0;
        }
        return edges(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) ? 1 : 0;
    };

    std::vector<std::size_t> marked;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int pass = 0; pass < 2; ++pass) {
            marked.clear();
            for (std::ptrdiff_t r = 0; r < rows; ++r) {
                for (std::ptrdiff_t c = 0; c < cols; ++c) {
                    if (!pixel(r, c)) {
                        continue;
                    }
                    // P2..P9 clockwise from north.
                    const std::array<int, 8> p{pixel(r - 1, c),     pixel(r - 1, c + 1), pixel(r, c + 1),
                                               pixel(r + 1, c + 1), pixel(r + 1, c),     pixel(r + 1, c - 1),
                                               pixel(r, c - 1),     pixel(r - 1, c - 1)};
                    int neighbours = 0;
                    int transitions = 0;
                    for (std::size_t k = 0; k < 8; ++k) {
                        neighbours += p[k];
                        transitions += (p[k] == 0 && p[(k + 1) % 8] == 1) ? 1 : 0;
                    }
                    if (neighbours < 2 || neighbours > 6 || transitions != 1) {
                        continue;
                    }
                    const int p2 = p[0], p4 = p[2], p6 = p[4], p8 = p[6];
                    const bool removable = pass == 0 ? (p2 * p4 * p6 == 0 && p4 * p6 * p8 == 0)
                                                     : (p2 * p4 * p8 == 0 && p2 * p6 * p8 == 0);
                    if (removable) {
                        marked.push_back(static_cast<std::size_t>(r * cols + c));
                    }
                }
            }
            for (std::size_t idx : marked) {
                edges[idx] = 0;
            }
            changed = changed || !marked.empty();
        }
    }
}

EdgeMap postprocess(const RealGrid& normalized_map, const PostprocessParams& params) {
    params.validate();
    EdgeMap edges = threshold_two_sided(normalized_map, params.thresh_min, params.thresh_max);
    remove_small_components(edges, params.min_component);
    if (params.thin) {
        thin(edges);
    }
    return edges;
}

} // namespace phycv
