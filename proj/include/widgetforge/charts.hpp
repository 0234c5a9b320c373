#pragma once

#include <vector>

#include "widgetforge/dsl.hpp"
#include "widgetforge/svg.hpp"

namespace wf::charts {

struct AxisRange {
    double min_value = 0.0;
    double max_value = 1.0;
};

// Rounds the padded data extreme up to a clean multiple of its own decade:
// 65 -> 80, 847 -> 1000, 23 -> 30. All-zero data yields [0, 1]; negative
// values mirror the same rounding below zero.
AxisRange axis_autorange(const std::vector<double>& values);

// True for leaf kinds rendered as an inline vector drawing.
bool is_svg_kind(dsl::ComponentKind kind);

// Builds the drawing for an svg leaf at the given pixel size. Props absent
// from the node fall back to their schema defaults.
svg::SvgNode chart_svg(const dsl::LeafNode& leaf, double width, double height);

// Decorative glyphs shared by the emitters.
svg::SvgNode image_glyph(double width, double height);
svg::SvgNode map_glyph(double width, double height);
svg::SvgNode placeholder_icon(double size);

} // namespace wf::charts
