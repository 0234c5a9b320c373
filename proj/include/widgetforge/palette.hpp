#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "widgetforge/image.hpp"

namespace wf::palette {

struct PaletteEntry {
    std::string hex;  // lowercase #rrggbb
    double weight;    // fraction of opaque pixels, renormalized over the emitted entries
};

using Palette = std::vector<PaletteEntry>;

// Seeded k-means++ with Lloyd iterations (max 50, tolerance 1e-4 on the
// largest centroid shift). Empty clusters are re-seeded from the point
// farthest from its assigned centroid. Stops early with fewer centroids when
// every point already coincides with one.
std::vector<std::array<double, 3>> kmeans(const std::vector<std::array<double, 3>>& points,
                                          int k, std::uint64_t seed);

// Dominant palette: opaque pixels (alpha >= 8) are uniformly sampled down to
// `cap` (seeded partial shuffle), clustered with kmeans, then every opaque
// pixel is reassigned to its nearest centroid by squared Euclidean distance.
// Entries are sorted by weight descending (ties by hex ascending) and the
// top n reported.
Palette extract_palette(const img::Image& image, int k = 12, int n = 8,
                        std::size_t cap = 1000000, std::uint64_t seed = 0);

} // namespace wf::palette
