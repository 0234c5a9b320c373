#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "widgetforge/dsl.hpp"

namespace wf::layout {

struct Box {
    double x { 0.0 };
    double y { 0.0 };
    double w { 0.0 };
    double h { 0.0 };
};

struct PlacedBox {
    std::string path; // structural id: "root", "root.0", "root.0.2", ...
    Box box;
};

struct LayoutTree {
    double viewport_w { 0.0 };
    double viewport_h { 0.0 };
    double shell_padding { 0.0 };
    std::vector<PlacedBox> boxes; // depth-first order, coordinates from the shell origin

    const Box* find(std::string_view path) const;
};

struct LayoutReport {
    double content_w { 0.0 }; // union extent of non-root boxes from the shell origin
    double content_h { 0.0 };
    double viewport_w { 0.0 };
    double viewport_h { 0.0 };
    std::vector<double> deltas; // per non-root node overhang beyond the shell padding box
};

// Deterministic text box model standing in for browser metrics:
// width 0.6*fontSize per grapheme, line height 1.2*fontSize; text wraps at
// spaces only when an explicit width is set.
std::pair<double, double> measure_leaf(const dsl::LeafNode& leaf, double avail_w, double avail_h);

// Natural (intrinsic) content size; percent dimensions count as auto here.
std::pair<double, double> measure_node(const dsl::Node& node, double avail_w, double avail_h);

// Single-pass flexbox resolution. Throws Error{DegenerateViewport} for
// nonpositive viewports and Error{SchemaError} when the root is missing.
LayoutTree solve_layout(const dsl::WidgetSpec& spec, double viewport_w, double viewport_h);

LayoutReport layout_report(const LayoutTree& tree);

// Psi = max(C_w/V_w - 1, C_h/V_h - 1, max_i delta_i) over present terms.
// <= 0 iff the widget fits inside the viewport.
double violation(const LayoutReport& report);

// Shell intrinsic width at unconstrained layout (root content + shell padding).
double natural_width(const dsl::WidgetSpec& spec);

nlohmann::json layout_to_json(const LayoutTree& tree, const LayoutReport& report, double psi);

} // namespace wf::layout
