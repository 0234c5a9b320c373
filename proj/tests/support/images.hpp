#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "widgetforge/image.hpp"

namespace wf::test {

using Rgba = std::array<uint8_t, 4>;

img::Image solid(int w, int h, Rgba c);
img::Image checker(int w, int h, int cell, Rgba a, Rgba b);
img::Image hgradient(int w, int h, Rgba from, Rgba to);
img::Image noise(std::uint64_t seed, int w, int h);

// Background plus n-1 random axis-aligned rectangles drawn from a fixed
// distinct-color palette; the result holds at most n distinct colors.
img::Image color_blocks(std::uint64_t seed, int w, int h, int n);

// Widget-like composition: rounded card, title bar, bars, and a dot row.
img::Image widget_fixture(std::uint64_t seed, int w, int h);

void fill_rect(img::Image& image, int x0, int y0, int x1, int y1, Rgba c);

} // namespace wf::test
