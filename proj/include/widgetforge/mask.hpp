#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "widgetforge/image.hpp"

namespace wf::mask {

struct Mask {
    int width { 0 };
    int height { 0 };
    std::vector<uint8_t> data; // 0 or 1, row-major

    uint8_t at(int x, int y) const { return data[static_cast<size_t>(y) * width + x]; }
    bool any() const;
};

struct Margins {
    bool defined { false };
    double left { 0.0 };
    double right { 0.0 };
    double top { 0.0 };
    double bottom { 0.0 };
};

// Edge-content mask: Sobel gradient of the luminance, normalized by its own
// maximum, thresholded by Otsu (strictly above the first maximal threshold),
// then dilated twice with a 3x3 square. A constant image yields an empty mask.
Mask content_mask(const img::Image& image);

// Distances from the mask support to each image edge, in pixels.
Margins mask_margins(const Mask& m);

// Inclusive bounding-box size of the support; (0, 0) when empty.
std::pair<int, int> mask_bbox_size(const Mask& m);

// Areas of the 8-connected components of the support, in row-major discovery
// order.
std::vector<int> component_areas(const Mask& m);

} // namespace wf::mask
