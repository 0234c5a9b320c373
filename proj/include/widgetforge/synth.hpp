#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "widgetforge/dsl.hpp"

namespace wf::synth {

enum class Theme { Light, Dark, Colorful, Glassmorphism, Minimal };

inline constexpr int kThemeCount = 5;

std::string_view theme_name(Theme t);
std::optional<Theme> theme_from_string(std::string_view name);
const std::vector<Theme>& all_themes();

// Mutation palette for one theme, loaded from a data file. Every entry must be
// schema-valid so mutate() preserves validity by construction.
struct ThemePalette {
    std::vector<std::string> background; // shell backgrounds
    std::vector<std::string> surface;    // container backgrounds
    std::vector<std::string> text;       // Text foregrounds
    std::vector<std::string> accents;    // any other color prop
    std::vector<std::vector<std::string>> chart_palettes;
    int radius_lo = 0; // integer-step delta range applied to present radii
    int radius_hi = 0;
    std::vector<int> font_weights;

    static ThemePalette from_json(const dsl::Json& j);
};

class ThemeLibrary {
public:
    // Reads <dir>/<theme>.json for all five themes.
    static ThemeLibrary load(const std::string& dir);

    const ThemePalette& palette(Theme t) const;
    ThemePalette& palette(Theme t);

private:
    std::array<ThemePalette, kThemeCount> palettes_;
};

// Hash of everything mutation must not touch: tree shape, kinds, dimensions,
// text content, and data values. Colors, radii, and font weights are excluded.
std::uint64_t structure_hash(const dsl::WidgetSpec& spec);

// Per-pair RNG seed; independent of batch iteration order.
std::uint64_t pair_seed(std::uint64_t seed, std::string_view spec_id, Theme theme);

// Restyles only fields present in the spec that the palette covers. Tree
// shape, component kinds, content, and data arrays are untouched.
dsl::WidgetSpec mutate(const dsl::WidgetSpec& spec, const ThemePalette& palette,
                       std::uint64_t seed);

struct BundleStatus {
    std::string spec_id;
    Theme theme = Theme::Light;
    bool ok = false;
    std::string error;          // empty when ok
    double width = 0.0;         // fitted layout size
    double height = 0.0;
    std::uint64_t structure = 0;
};

struct BatchResult {
    std::vector<BundleStatus> items; // input order: specs outer, themes inner

    int failures() const;
    dsl::Json manifest_json(std::uint64_t seed) const;
};

// Writes <out_dir>/<id>/<theme>/{widget.json, widget.html, widget.jsx,
// layout.json} per pair plus a top-level manifest.json. Per-item failures are
// recorded in the manifest; the batch never aborts.
BatchResult batch_generate(const std::vector<std::pair<std::string, dsl::WidgetSpec>>& specs,
                           const std::vector<Theme>& themes, std::uint64_t seed,
                           const ThemeLibrary& lib, const std::string& out_dir,
                           const std::string& icon_dir = {}, int jobs = 1);

} // namespace wf::synth
