#include "widgetforge/layout.hpp"

#include <algorithm>
#include <cmath>

#include "widgetforge/error.hpp"

namespace wf::layout {

using dsl::ComponentKind;
using dsl::ContainerNode;
using dsl::Dimension;
using dsl::Direction;
using dsl::LeafNode;
using dsl::Node;

namespace {

// Continuation bytes (10xxxxxx) do not start a code point.
size_t utf8_codepoints(std::string_view s)
{
    size_t n = 0;
    for (unsigned char c : s) {
        if ((c & 0xC0) != 0x80)
            ++n;
    }
    return n;
}

double prop_number(const dsl::PropMap& props, const dsl::KindSchema& schema, const char* name)
{
    auto it = props.find(name);
    if (it != props.end() && dsl::json_is_number(it->second))
        return it->second.get<double>();
    const dsl::PropSpec* ps = schema.find(name);
    return ps && dsl::json_is_number(ps->default_value) ? ps->default_value.get<double>() : 0.0;
}

constexpr double kCharWidthEm = 0.6;  // per-grapheme advance, in font-size units
constexpr double kLineHeightEm = 1.2; // line box height, in font-size units

struct TextMetrics {
    double width;
    double height;
};

TextMetrics measure_text(const std::string& content, double font_size, std::optional<double> wrap_width)
{
    const double char_w = kCharWidthEm * font_size;
    const double line_h = kLineHeightEm * font_size;
    if (!wrap_width) {
        return { char_w * static_cast<double>(utf8_codepoints(content)), line_h };
    }

    // Greedy wrap at spaces; an over-long word occupies its own line and may
    // overflow (overflow stays representable, never clipped).
    size_t lines = 1;
    double line_w = 0.0;
    double max_line = 0.0;
    size_t pos = 0;
    bool any_word = false;
    while (pos <= content.size()) {
        size_t space = content.find(' ', pos);
        std::string_view word(content.data() + pos,
                              (space == std::string::npos ? content.size() : space) - pos);
        double word_w = char_w * static_cast<double>(utf8_codepoints(word));
        if (!word.empty()) {
            double candidate = line_w == 0.0 ? word_w : line_w + char_w + word_w;
            if (line_w > 0.0 && candidate > *wrap_width) {
                ++lines;
                line_w = word_w;
            } else {
                line_w = candidate;
            }
            max_line = std::max(max_line, line_w);
            any_word = true;
        }
        if (space == std::string::npos)
            break;
        pos = space + 1;
    }
    if (!any_word)
        lines = 1;
    return { *wrap_width, static_cast<double>(lines) * line_h };
}

struct MeasureCtx {
    bool percent_as_auto { false };
};

std::optional<double> resolve_dim(const std::optional<Dimension>& dim, double base,
                                  const MeasureCtx& ctx)
{
    if (!dim)
        return std::nullopt;
    if (dim->unit == Dimension::Unit::Px)
        return std::max(0.0, dim->value);
    if (ctx.percent_as_auto)
        return std::nullopt;
    return std::max(0.0, dim->value / 100.0 * base);
}

std::pair<double, double> measure_leaf_impl(const LeafNode& leaf, double avail_w, double avail_h,
                                            const MeasureCtx& ctx)
{
    const dsl::KindSchema& schema = dsl::schema_for(leaf.component);
    std::optional<double> ew = resolve_dim(leaf.width, avail_w, ctx);
    std::optional<double> eh = resolve_dim(leaf.height, avail_h, ctx);

    double w = 0.0;
    double h = 0.0;
    switch (leaf.component) {
    case ComponentKind::Text: {
        double fs = prop_number(leaf.props, schema, "fontSize");
        TextMetrics m = measure_text(leaf.content.value_or(""), fs, ew);
        w = m.width;
        h = m.height;
        break;
    }
    case ComponentKind::Icon: {
        double s = prop_number(leaf.props, schema, "size");
        w = h = s;
        break;
    }
    case ComponentKind::AppLogo: {
        double s = prop_number(leaf.props, schema, "size");
        w = h = s;
        break;
    }
    case ComponentKind::Image:
    case ComponentKind::MapImage:
        w = h = 48.0;
        break;
    case ComponentKind::Button: {
        double fs = prop_number(leaf.props, schema, "fontSize");
        double pad = prop_number(leaf.props, schema, "padding");
        double inner_w = fs;
        double inner_h = fs;
        auto text = leaf.props.find("content");
        if (text != leaf.props.end() && text->second.is_string()) {
            TextMetrics m = measure_text(text->second.get_ref<const std::string&>(), fs, std::nullopt);
            inner_w = m.width;
            inner_h = m.height;
        }
        w = inner_w + 2.0 * pad;
        h = inner_h + 2.0 * pad;
        break;
    }
    case ComponentKind::Checkbox: {
        double s = prop_number(leaf.props, schema, "size");
        w = h = s;
        break;
    }
    case ComponentKind::Switch:
        w = 40.0;
        h = 24.0;
        break;
    case ComponentKind::Slider:
        w = 120.0;
        h = 16.0;
        break;
    case ComponentKind::Divider: {
        double t = prop_number(leaf.props, schema, "thickness");
        w = h = t;
        break;
    }
    case ComponentKind::Indicator:
        w = 4.0;
        h = 16.0;
        break;
    case ComponentKind::ProgressBar:
        w = 120.0;
        h = 6.0;
        break;
    case ComponentKind::ProgressRing: {
        double s = prop_number(leaf.props, schema, "size");
        w = h = s;
        break;
    }
    case ComponentKind::Sparkline:
        w = 64.0;
        h = 24.0;
        break;
    case ComponentKind::PieChart:
        w = 100.0;
        h = 100.0;
        break;
    case ComponentKind::BarChart:
    case ComponentKind::StackedBarChart:
    case ComponentKind::LineChart:
    case ComponentKind::RadarChart:
        w = 160.0;
        h = 100.0;
        break;
    }

    if (ew)
        w = *ew;
    if (eh)
        h = *eh;
    return { w, h };
}

std::pair<double, double> measure_node_impl(const Node& node, double avail_w, double avail_h,
                                            const MeasureCtx& ctx);

std::pair<double, double> measure_container_impl(const ContainerNode& node, double avail_w,
                                                 double avail_h, const MeasureCtx& ctx)
{
    const bool row = node.direction.value_or(Direction::Col) == Direction::Row;
    const double inner_w = std::max(0.0, avail_w - 2.0 * node.padding);
    const double inner_h = std::max(0.0, avail_h - 2.0 * node.padding);

    double main_sum = 0.0;
    double cross_max = 0.0;
    for (const Node& child : node.children) {
        auto [cw, ch] = measure_node_impl(child, inner_w, inner_h, ctx);
        main_sum += row ? cw : ch;
        cross_max = std::max(cross_max, row ? ch : cw);
    }
    if (node.children.size() > 1)
        main_sum += node.gap * static_cast<double>(node.children.size() - 1);

    double w = (row ? main_sum : cross_max) + 2.0 * node.padding;
    double h = (row ? cross_max : main_sum) + 2.0 * node.padding;
    if (auto ew = resolve_dim(node.width, avail_w, ctx))
        w = *ew;
    if (auto eh = resolve_dim(node.height, avail_h, ctx))
        h = *eh;
    return { w, h };
}

std::pair<double, double> measure_node_impl(const Node& node, double avail_w, double avail_h,
                                            const MeasureCtx& ctx)
{
    if (node.is_container())
        return measure_container_impl(node.container(), avail_w, avail_h, ctx);
    return measure_leaf_impl(node.leaf(), avail_w, avail_h, ctx);
}

const std::optional<Dimension>& node_width(const Node& n)
{
    return n.is_container() ? n.container().width : n.leaf().width;
}

const std::optional<Dimension>& node_height(const Node& n)
{
    return n.is_container() ? n.container().height : n.leaf().height;
}

double node_flex(const Node& n)
{
    return n.is_container() ? n.container().flex.weight : n.leaf().flex.weight;
}

void place_node(const Node& node, const Box& box, const std::string& path,
                std::vector<PlacedBox>& out);

void place_container(const ContainerNode& node, const Box& box, const std::string& path,
                     std::vector<PlacedBox>& out)
{
    const bool row = node.direction.value_or(Direction::Col) == Direction::Row;
    const double inner_x = box.x + node.padding;
    const double inner_y = box.y + node.padding;
    const double inner_w = std::max(0.0, box.w - 2.0 * node.padding);
    const double inner_h = std::max(0.0, box.h - 2.0 * node.padding);
    const double inner_main = row ? inner_w : inner_h;
    const double inner_cross = row ? inner_h : inner_w;
    const MeasureCtx ctx {};

    const size_t n = node.children.size();
    std::vector<double> main_size(n, 0.0);
    std::vector<double> cross_size(n, 0.0);
    std::vector<double> flex_weight(n, 0.0);

    // Pass 1: fixed main sizes. An explicit main dimension wins over flex;
    // flex weight 0 means content-sized. Percent resolves against the
    // parent's inner box.
    double fixed_sum = 0.0;
    double flex_total = 0.0;
    for (size_t i = 0; i < n; ++i) {
        const Node& child = node.children[i];
        const auto& main_dim = row ? node_width(child) : node_height(child);
        if (auto m = resolve_dim(main_dim, inner_main, ctx)) {
            main_size[i] = *m;
            fixed_sum += *m;
            continue;
        }
        double weight = node_flex(child);
        if (weight > 0.0) {
            flex_weight[i] = weight;
            flex_total += weight;
            continue;
        }
        auto [cw, ch] = measure_node_impl(child, inner_w, inner_h, ctx);
        main_size[i] = row ? cw : ch;
        fixed_sum += main_size[i];
    }

    // Pass 2: remaining space splits proportionally among flex children.
    double gaps = n > 1 ? node.gap * static_cast<double>(n - 1) : 0.0;
    double remaining = std::max(0.0, inner_main - fixed_sum - gaps);
    for (size_t i = 0; i < n; ++i) {
        if (flex_weight[i] > 0.0)
            main_size[i] = remaining * flex_weight[i] / flex_total;
    }

    // Cross axis: explicit size or stretch to the inner box.
    for (size_t i = 0; i < n; ++i) {
        const Node& child = node.children[i];
        const auto& cross_dim = row ? node_height(child) : node_width(child);
        if (auto c = resolve_dim(cross_dim, inner_cross, ctx))
            cross_size[i] = *c;
        else
            cross_size[i] = inner_cross;
    }

    double cursor = row ? inner_x : inner_y;
    for (size_t i = 0; i < n; ++i) {
        Box child_box;
        if (row) {
            child_box = { cursor, inner_y, main_size[i], cross_size[i] };
        } else {
            child_box = { inner_x, cursor, cross_size[i], main_size[i] };
        }
        place_node(node.children[i], child_box, path + "." + std::to_string(i), out);
        cursor += main_size[i] + node.gap;
    }
}

void place_node(const Node& node, const Box& box, const std::string& path,
                std::vector<PlacedBox>& out)
{
    out.push_back({ path, box });
    if (node.is_container())
        place_container(node.container(), box, path, out);
}

} // namespace

const Box* LayoutTree::find(std::string_view path) const
{
    for (const auto& pb : boxes) {
        if (pb.path == path)
            return &pb.box;
    }
    return nullptr;
}

std::pair<double, double> measure_leaf(const dsl::LeafNode& leaf, double avail_w, double avail_h)
{
    return measure_leaf_impl(leaf, avail_w, avail_h, MeasureCtx {});
}

std::pair<double, double> measure_node(const dsl::Node& node, double avail_w, double avail_h)
{
    return measure_node_impl(node, avail_w, avail_h, MeasureCtx {});
}

LayoutTree solve_layout(const dsl::WidgetSpec& spec, double viewport_w, double viewport_h)
{
    if (!(viewport_w > 0.0) || !(viewport_h > 0.0) || !std::isfinite(viewport_w)
        || !std::isfinite(viewport_h))
        throw Error(ErrorCode::DegenerateViewport, "viewport extents must be positive finite");
    if (!spec.root || !spec.root->is_container())
        throw Error(ErrorCode::SchemaError, "spec has no root container", "root");

    LayoutTree tree;
    tree.viewport_w = viewport_w;
    tree.viewport_h = viewport_h;
    tree.shell_padding = spec.padding;

    Box root_box { spec.padding, spec.padding, std::max(0.0, viewport_w - 2.0 * spec.padding),
                   std::max(0.0, viewport_h - 2.0 * spec.padding) };
    place_node(*spec.root, root_box, "root", tree.boxes);
    return tree;
}

LayoutReport layout_report(const LayoutTree& tree)
{
    LayoutReport report;
    report.viewport_w = tree.viewport_w;
    report.viewport_h = tree.viewport_h;

    const double pad = tree.shell_padding;
    const double pb_x0 = pad;
    const double pb_y0 = pad;
    const double pb_x1 = pad + std::max(0.0, tree.viewport_w - 2.0 * pad);
    const double pb_y1 = pad + std::max(0.0, tree.viewport_h - 2.0 * pad);

    for (const auto& pb : tree.boxes) {
        if (pb.path == "root")
            continue; // the root always spans the shell padding box
        report.content_w = std::max(report.content_w, pb.box.x + pb.box.w);
        report.content_h = std::max(report.content_h, pb.box.y + pb.box.h);

        double left = (pb_x0 - pb.box.x) / tree.viewport_w;
        double right = (pb.box.x + pb.box.w - pb_x1) / tree.viewport_w;
        double top = (pb_y0 - pb.box.y) / tree.viewport_h;
        double bottom = (pb.box.y + pb.box.h - pb_y1) / tree.viewport_h;
        report.deltas.push_back(std::max({ 0.0, left, right, top, bottom }));
    }
    return report;
}

double violation(const LayoutReport& report)
{
    double psi = std::max(report.content_w / report.viewport_w - 1.0,
                          report.content_h / report.viewport_h - 1.0);
    for (double d : report.deltas)
        psi = std::max(psi, d);
    return psi;
}

double natural_width(const dsl::WidgetSpec& spec)
{
    if (!spec.root || !spec.root->is_container())
        throw Error(ErrorCode::SchemaError, "spec has no root container", "root");
    MeasureCtx ctx { .percent_as_auto = true };
    auto [w, h] = measure_node_impl(*spec.root, 0.0, 0.0, ctx);
    (void)h;
    return w + 2.0 * spec.padding;
}

nlohmann::json layout_to_json(const LayoutTree& tree, const LayoutReport& report, double psi)
{
    nlohmann::json boxes = nlohmann::json::array();
    for (const auto& pb : tree.boxes) {
        boxes.push_back({ { "path", pb.path },
                          { "x", pb.box.x },
                          { "y", pb.box.y },
                          { "w", pb.box.w },
                          { "h", pb.box.h } });
    }
    nlohmann::json j;
    j["boxes"] = std::move(boxes);
    j["report"] = { { "C_w", report.content_w },
                    { "C_h", report.content_h },
                    { "V_w", report.viewport_w },
                    { "V_h", report.viewport_h },
                    { "psi", psi } };
    return j;
}

} // namespace wf::layout
