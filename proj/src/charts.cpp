#include "widgetforge/charts.hpp"

#include <algorithm>
#include <cmath>

#include "widgetforge/util.hpp"

namespace wf::charts {

namespace {

using dsl::ComponentKind;
using dsl::Json;
using dsl::LeafNode;
using svg::SvgNode;

constexpr double kPi = 3.14159265358979323846;
constexpr double kLabelStrip = 12.0;
const char* kHairline = "#d1d1d6";
const char* kLabelColor = "#8e8e93";

std::string fmt(double v) { return format_number(v); }

Json prop_value(const LeafNode& leaf, const char* name)
{
    auto it = leaf.props.find(name);
    if (it != leaf.props.end())
        return it->second;
    const auto* ps = dsl::schema_for(leaf.component).find(name);
    return ps ? ps->default_value : Json();
}

double num_prop(const LeafNode& leaf, const char* name)
{
    Json v = prop_value(leaf, name);
    return v.is_number() ? v.get<double>() : 0.0;
}

std::string str_prop(const LeafNode& leaf, const char* name)
{
    Json v = prop_value(leaf, name);
    return v.is_string() ? v.get<std::string>() : std::string();
}

bool bool_prop(const LeafNode& leaf, const char* name)
{
    Json v = prop_value(leaf, name);
    return v.is_boolean() && v.get<bool>();
}

std::vector<double> data_1d(const LeafNode& leaf, const char* name = "data")
{
    std::vector<double> out;
    Json v = prop_value(leaf, name);
    if (v.is_array())
        for (const auto& e : v)
            out.push_back(e.is_number() ? e.get<double>() : 0.0);
    return out;
}

std::vector<std::vector<double>> data_2d(const LeafNode& leaf)
{
    std::vector<std::vector<double>> out;
    Json v = prop_value(leaf, "data");
    if (v.is_array())
        for (const auto& row : v) {
            std::vector<double> r;
            if (row.is_array())
                for (const auto& e : row)
                    r.push_back(e.is_number() ? e.get<double>() : 0.0);
            out.push_back(std::move(r));
        }
    return out;
}

std::vector<std::string> string_list(const LeafNode& leaf, const char* name)
{
    std::vector<std::string> out;
    Json v = prop_value(leaf, name);
    if (v.is_array())
        for (const auto& e : v)
            if (e.is_string())
                out.push_back(e.get<std::string>());
    return out;
}

std::string series_color(const std::vector<std::string>& colors, const std::string& fallback, size_t i)
{
    if (colors.empty())
        return fallback;
    return colors[i % colors.size()];
}

SvgNode svg_root(double w, double h)
{
    SvgNode n("svg");
    n.attr("xmlns", "http://www.w3.org/2000/svg");
    n.attr("width", fmt(w));
    n.attr("height", fmt(h));
    n.attr("viewBox", "0 0 " + fmt(w) + " " + fmt(h));
    return n;
}

SvgNode line(double x1, double y1, double x2, double y2, const std::string& stroke, double width)
{
    SvgNode n("line");
    n.attr("x1", fmt(x1)).attr("y1", fmt(y1)).attr("x2", fmt(x2)).attr("y2", fmt(y2));
    n.attr("stroke", stroke).attr("stroke-width", fmt(width));
    return n;
}

SvgNode rect(double x, double y, double w, double h, const std::string& fill)
{
    SvgNode n("rect");
    n.attr("x", fmt(x)).attr("y", fmt(y)).attr("width", fmt(w)).attr("height", fmt(h));
    n.attr("fill", fill);
    return n;
}

SvgNode circle(double cx, double cy, double r, const std::string& fill)
{
    SvgNode n("circle");
    n.attr("cx", fmt(cx)).attr("cy", fmt(cy)).attr("r", fmt(r)).attr("fill", fill);
    return n;
}

SvgNode label_text(double x, double y, const std::string& s)
{
    SvgNode n("text");
    n.attr("x", fmt(x)).attr("y", fmt(y));
    n.attr("text-anchor", "middle").attr("font-family", "sans-serif");
    n.attr("font-size", "8").attr("fill", kLabelColor);
    n.text = s;
    return n;
}

// Shares the vertical mapping between the bar and line charts.
double y_of(double v, const AxisRange& r, double plot_h)
{
    double span = r.max_value - r.min_value;
    if (span <= 0.0)
        return plot_h;
    return plot_h * (r.max_value - v) / span;
}

SvgNode bar_chart(const LeafNode& leaf, double w, double h)
{
    auto data = data_1d(leaf);
    auto labels = string_list(leaf, "labels");
    auto colors = string_list(leaf, "colors");
    std::string base = str_prop(leaf, "color");

    double plot_h = labels.empty() ? h : std::max(h - kLabelStrip, 1.0);
    AxisRange range = axis_autorange(data);
    double cap = num_prop(leaf, "max");
    if (cap > 0.0)
        range.max_value = cap;

    SvgNode root = svg_root(w, h);
    double y0 = y_of(0.0, range, plot_h);
    root.child(line(0, y0, w, y0, kHairline, 1));

    size_t n = data.size();
    double slot = n > 0 ? w / static_cast<double>(n) : w;
    for (size_t i = 0; i < n; ++i) {
        double yv = y_of(data[i], range, plot_h);
        double x = static_cast<double>(i) * slot + 0.2 * slot;
        root.child(rect(x, std::min(yv, y0), 0.6 * slot, std::abs(y0 - yv),
                        series_color(colors, base, i)));
    }
    for (size_t i = 0; i < labels.size() && i < n; ++i) {
        double cx = static_cast<double>(i) * slot + 0.5 * slot;
        root.child(label_text(cx, plot_h + 9.0, labels[i]));
    }
    return root;
}

SvgNode stacked_bar_chart(const LeafNode& leaf, double w, double h)
{
    auto series = data_2d(leaf);
    auto labels = string_list(leaf, "labels");
    auto colors = string_list(leaf, "colors");

    size_t n = 0;
    for (const auto& s : series)
        n = std::max(n, s.size());

    std::vector<double> totals(n, 0.0);
    for (const auto& s : series)
        for (size_t i = 0; i < s.size(); ++i)
            totals[i] += std::max(s[i], 0.0);

    double plot_h = labels.empty() ? h : std::max(h - kLabelStrip, 1.0);
    AxisRange range = axis_autorange(totals);

    SvgNode root = svg_root(w, h);
    root.child(line(0, plot_h, w, plot_h, kHairline, 1));

    double slot = n > 0 ? w / static_cast<double>(n) : w;
    double unit = range.max_value > 0.0 ? plot_h / range.max_value : 0.0;
    for (size_t i = 0; i < n; ++i) {
        double x = static_cast<double>(i) * slot + 0.2 * slot;
        double cum = 0.0;
        for (size_t s = 0; s < series.size(); ++s) {
            double v = i < series[s].size() ? std::max(series[s][i], 0.0) : 0.0;
            double y_bottom = plot_h - cum * unit;
            double seg = v * unit;
            root.child(rect(x, y_bottom - seg, 0.6 * slot, seg,
                            series_color(colors, "#007aff", s)));
            cum += v;
        }
    }
    for (size_t i = 0; i < labels.size() && i < n; ++i) {
        double cx = static_cast<double>(i) * slot + 0.5 * slot;
        root.child(label_text(cx, plot_h + 9.0, labels[i]));
    }
    return root;
}

SvgNode line_chart(const LeafNode& leaf, double w, double h)
{
    auto data = data_1d(leaf);
    auto labels = string_list(leaf, "labels");
    std::string color = str_prop(leaf, "color");

    double plot_h = labels.empty() ? h : std::max(h - kLabelStrip, 1.0);
    AxisRange range = axis_autorange(data);

    SvgNode root = svg_root(w, h);
    root.child(line(0, plot_h, w, plot_h, kHairline, 1));

    size_t n = data.size();
    std::string points;
    for (size_t i = 0; i < n; ++i) {
        double x = n > 1 ? static_cast<double>(i) * w / static_cast<double>(n - 1) : w / 2.0;
        double y = y_of(data[i], range, plot_h);
        if (!points.empty())
            points += " ";
        points += fmt(x) + "," + fmt(y);
    }
    SvgNode poly("polyline");
    poly.attr("points", points).attr("fill", "none").attr("stroke", color);
    poly.attr("stroke-width", "2").attr("stroke-linecap", "round").attr("stroke-linejoin", "round");
    root.child(std::move(poly));

    for (size_t i = 0; i < labels.size() && i < n; ++i) {
        double cx = n > 1 ? static_cast<double>(i) * w / static_cast<double>(n - 1) : w / 2.0;
        root.child(label_text(cx, plot_h + 9.0, labels[i]));
    }
    return root;
}

SvgNode pie_chart(const LeafNode& leaf, double w, double h)
{
    auto data = data_1d(leaf);
    auto colors = string_list(leaf, "colors");
    if (colors.empty())
        colors = { "#007aff" };

    double cx = w / 2.0;
    double cy = h / 2.0;
    double r = std::max(std::min(w, h) / 2.0 - 1.0, 0.5);

    double total = 0.0;
    for (double v : data)
        total += std::max(v, 0.0);

    SvgNode root = svg_root(w, h);
    size_t n = data.size();
    if (n == 0)
        return root;

    double start = -90.0;
    for (size_t i = 0; i < n; ++i) {
        double share = total > 0.0 ? std::max(data[i], 0.0) / total : 1.0 / static_cast<double>(n);
        if (share <= 0.0)
            continue;
        std::string fill = colors[i % colors.size()];
        if (share >= 1.0 - 1e-12) {
            root.child(circle(cx, cy, r, fill));
            break;
        }
        double a0 = start * kPi / 180.0;
        double a1 = (start + share * 360.0) * kPi / 180.0;
        double x0 = cx + r * std::cos(a0);
        double y0 = cy + r * std::sin(a0);
        double x1 = cx + r * std::cos(a1);
        double y1 = cy + r * std::sin(a1);
        int large = share > 0.5 ? 1 : 0;
        SvgNode path("path");
        path.attr("d", "M " + fmt(cx) + " " + fmt(cy) + " L " + fmt(x0) + " " + fmt(y0) + " A "
                           + fmt(r) + " " + fmt(r) + " 0 " + std::to_string(large) + " 1 "
                           + fmt(x1) + " " + fmt(y1) + " Z");
        path.attr("fill", fill);
        root.child(std::move(path));
        start += share * 360.0;
    }
    return root;
}

SvgNode radar_chart(const LeafNode& leaf, double w, double h)
{
    auto data = data_1d(leaf);
    std::string color = str_prop(leaf, "color");

    double cx = w / 2.0;
    double cy = h / 2.0;
    double R = std::max(std::min(w, h) / 2.0 - 1.0, 0.5);
    AxisRange range = axis_autorange(data);

    SvgNode root = svg_root(w, h);
    size_t n = data.size();
    if (n == 0)
        return root;

    std::string rim;
    std::string shape;
    for (size_t i = 0; i < n; ++i) {
        double a = (-90.0 + 360.0 * static_cast<double>(i) / static_cast<double>(n)) * kPi / 180.0;
        double ux = std::cos(a);
        double uy = std::sin(a);
        root.child(line(cx, cy, cx + R * ux, cy + R * uy, kHairline, 1));
        if (!rim.empty())
            rim += " ";
        rim += fmt(cx + R * ux) + "," + fmt(cy + R * uy);
        double rv = range.max_value > 0.0 ? std::max(data[i], 0.0) / range.max_value * R : 0.0;
        if (!shape.empty())
            shape += " ";
        shape += fmt(cx + rv * ux) + "," + fmt(cy + rv * uy);
    }
    SvgNode outline("polygon");
    outline.attr("points", rim).attr("fill", "none").attr("stroke", kHairline).attr("stroke-width", "1");
    root.child(std::move(outline));

    SvgNode poly("polygon");
    poly.attr("points", shape).attr("fill", color + "33").attr("stroke", color);
    poly.attr("stroke-width", "2").attr("stroke-linejoin", "round");
    root.child(std::move(poly));
    return root;
}

SvgNode sparkline(const LeafNode& leaf, double w, double h)
{
    auto data = data_1d(leaf);
    std::string color = str_prop(leaf, "color");

    double lo = 0.0;
    double hi = 0.0;
    if (!data.empty()) {
        lo = *std::min_element(data.begin(), data.end());
        hi = *std::max_element(data.begin(), data.end());
    }

    SvgNode root = svg_root(w, h);
    size_t n = data.size();
    std::string points;
    for (size_t i = 0; i < n; ++i) {
        double x = n > 1 ? 1.0 + static_cast<double>(i) * (w - 2.0) / static_cast<double>(n - 1)
                         : w / 2.0;
        double y = hi > lo ? 1.0 + (h - 2.0) * (hi - data[i]) / (hi - lo) : h / 2.0;
        if (!points.empty())
            points += " ";
        points += fmt(x) + "," + fmt(y);
    }
    SvgNode poly("polyline");
    poly.attr("points", points).attr("fill", "none").attr("stroke", color);
    poly.attr("stroke-width", "1.5").attr("stroke-linecap", "round").attr("stroke-linejoin", "round");
    root.child(std::move(poly));
    return root;
}

SvgNode progress_ring(const LeafNode& leaf, double w, double h)
{
    double value = std::clamp(num_prop(leaf, "value"), 0.0, 1.0);
    double thickness = num_prop(leaf, "thickness");
    std::string color = str_prop(leaf, "color");
    std::string track = str_prop(leaf, "trackColor");

    double d = std::min(w, h);
    double r = std::max((d - thickness) / 2.0, 0.1);
    double cx = w / 2.0;
    double cy = h / 2.0;
    double circumference = 2.0 * kPi * r;

    SvgNode root = svg_root(w, h);
    SvgNode tr("circle");
    tr.attr("cx", fmt(cx)).attr("cy", fmt(cy)).attr("r", fmt(r));
    tr.attr("fill", "none").attr("stroke", track).attr("stroke-width", fmt(thickness));
    root.child(std::move(tr));

    SvgNode arc("circle");
    arc.attr("cx", fmt(cx)).attr("cy", fmt(cy)).attr("r", fmt(r));
    arc.attr("fill", "none").attr("stroke", color).attr("stroke-width", fmt(thickness));
    arc.attr("stroke-dasharray", fmt(value * circumference) + " " + fmt(circumference));
    arc.attr("stroke-linecap", "round");
    arc.attr("transform", "rotate(-90 " + fmt(cx) + " " + fmt(cy) + ")");
    root.child(std::move(arc));
    return root;
}

SvgNode checkbox(const LeafNode& leaf, double w, double h)
{
    bool state = bool_prop(leaf, "state");
    std::string color = str_prop(leaf, "color");
    double s = std::min(w, h);

    SvgNode root = svg_root(w, h);
    SvgNode box("rect");
    box.attr("x", "1").attr("y", "1");
    box.attr("width", fmt(s - 2.0)).attr("height", fmt(s - 2.0)).attr("rx", fmt(0.2 * s));
    if (state) {
        box.attr("fill", color);
        root.child(std::move(box));
        SvgNode check("path");
        check.attr("d", "M " + fmt(0.28 * s) + " " + fmt(0.53 * s) + " L " + fmt(0.44 * s) + " "
                            + fmt(0.68 * s) + " L " + fmt(0.72 * s) + " " + fmt(0.35 * s));
        check.attr("fill", "none").attr("stroke", "#ffffff").attr("stroke-width", fmt(0.11 * s));
        check.attr("stroke-linecap", "round").attr("stroke-linejoin", "round");
        root.child(std::move(check));
    } else {
        box.attr("fill", "none").attr("stroke", color).attr("stroke-width", "2");
        root.child(std::move(box));
    }
    return root;
}

SvgNode toggle_switch(const LeafNode& leaf, double w, double h)
{
    bool state = bool_prop(leaf, "state");
    std::string color = str_prop(leaf, "color");

    SvgNode root = svg_root(w, h);
    SvgNode track("rect");
    track.attr("x", "0").attr("y", "0").attr("width", fmt(w)).attr("height", fmt(h));
    track.attr("rx", fmt(h / 2.0)).attr("fill", state ? color : "#e5e5ea");
    root.child(std::move(track));
    double knob_cx = state ? w - h / 2.0 : h / 2.0;
    root.child(circle(knob_cx, h / 2.0, std::max(h / 2.0 - 2.0, 0.5), "#ffffff"));
    return root;
}

SvgNode slider(const LeafNode& leaf, double w, double h)
{
    double value = std::clamp(num_prop(leaf, "value"), 0.0, 1.0);
    std::string color = str_prop(leaf, "color");

    double cy = h / 2.0;
    double knob_r = std::min(8.0, h / 2.0);
    SvgNode root = svg_root(w, h);
    SvgNode track("rect");
    track.attr("x", "0").attr("y", fmt(cy - 2.0)).attr("width", fmt(w)).attr("height", "4");
    track.attr("rx", "2").attr("fill", "#e5e5ea");
    root.child(std::move(track));
    SvgNode fill("rect");
    fill.attr("x", "0").attr("y", fmt(cy - 2.0)).attr("width", fmt(value * w)).attr("height", "4");
    fill.attr("rx", "2").attr("fill", color);
    root.child(std::move(fill));
    double cx = w > 2.0 * knob_r ? knob_r + value * (w - 2.0 * knob_r) : w / 2.0;
    SvgNode knob("circle");
    knob.attr("cx", fmt(cx)).attr("cy", fmt(cy)).attr("r", fmt(knob_r));
    knob.attr("fill", "#ffffff").attr("stroke", "#d1d1d6").attr("stroke-width", "1");
    root.child(std::move(knob));
    return root;
}

} // namespace

AxisRange axis_autorange(const std::vector<double>& values)
{
    double vmax = 0.0;
    double vmin = 0.0;
    for (double v : values) {
        vmax = std::max(vmax, v);
        vmin = std::min(vmin, v);
    }

    auto round_up_decade = [](double v) {
        double m = std::pow(10.0, std::floor(std::log10(v)));
        double q = v / m;
        double f = std::floor(q);
        if (q - f < 1e-9)
            return f * m;
        return std::ceil(q) * m;
    };

    AxisRange r;
    r.max_value = vmax > 0.0 ? round_up_decade(1.1 * vmax) : 0.0;
    r.min_value = vmin < 0.0 ? -round_up_decade(1.1 * -vmin) : 0.0;
    if (r.max_value == 0.0 && r.min_value == 0.0)
        r.max_value = 1.0;
    return r;
}

bool is_svg_kind(dsl::ComponentKind kind)
{
    switch (kind) {
    case ComponentKind::Checkbox:
    case ComponentKind::Switch:
    case ComponentKind::Slider:
    case ComponentKind::ProgressRing:
    case ComponentKind::Sparkline:
    case ComponentKind::BarChart:
    case ComponentKind::StackedBarChart:
    case ComponentKind::LineChart:
    case ComponentKind::PieChart:
    case ComponentKind::RadarChart:
        return true;
    default:
        return false;
    }
}

svg::SvgNode chart_svg(const dsl::LeafNode& leaf, double width, double height)
{
    double w = std::max(width, 1.0);
    double h = std::max(height, 1.0);
    switch (leaf.component) {
    case ComponentKind::Checkbox: return checkbox(leaf, w, h);
    case ComponentKind::Switch: return toggle_switch(leaf, w, h);
    case ComponentKind::Slider: return slider(leaf, w, h);
    case ComponentKind::ProgressRing: return progress_ring(leaf, w, h);
    case ComponentKind::Sparkline: return sparkline(leaf, w, h);
    case ComponentKind::BarChart: return bar_chart(leaf, w, h);
    case ComponentKind::StackedBarChart: return stacked_bar_chart(leaf, w, h);
    case ComponentKind::LineChart: return line_chart(leaf, w, h);
    case ComponentKind::PieChart: return pie_chart(leaf, w, h);
    case ComponentKind::RadarChart: return radar_chart(leaf, w, h);
    default: break;
    }
    return svg_root(w, h);
}

svg::SvgNode image_glyph(double width, double height)
{
    double w = std::max(width, 1.0);
    double h = std::max(height, 1.0);
    SvgNode root = svg_root(w, h);
    root.child(rect(0, 0, w, h, "#e5e5ea"));
    SvgNode hills("path");
    hills.attr("d", "M " + fmt(0.15 * w) + " " + fmt(0.75 * h) + " L " + fmt(0.4 * w) + " "
                        + fmt(0.45 * h) + " L " + fmt(0.55 * w) + " " + fmt(0.6 * h) + " L "
                        + fmt(0.7 * w) + " " + fmt(0.45 * h) + " L " + fmt(0.85 * w) + " "
                        + fmt(0.75 * h) + " Z");
    hills.attr("fill", "#b0b0b8");
    root.child(std::move(hills));
    root.child(circle(0.72 * w, 0.3 * h, 0.07 * std::min(w, h), "#b0b0b8"));
    return root;
}

svg::SvgNode map_glyph(double width, double height)
{
    double w = std::max(width, 1.0);
    double h = std::max(height, 1.0);
    SvgNode root = svg_root(w, h);
    root.child(rect(0, 0, w, h, "#e2ece2"));
    SvgNode road("polyline");
    road.attr("points", fmt(0.1 * w) + "," + fmt(0.85 * h) + " " + fmt(0.35 * w) + ","
                            + fmt(0.55 * h) + " " + fmt(0.6 * w) + "," + fmt(0.65 * h) + " "
                            + fmt(0.9 * w) + "," + fmt(0.25 * h));
    road.attr("fill", "none").attr("stroke", "#ffffff");
    road.attr("stroke-width", fmt(0.08 * std::min(w, h)));
    road.attr("stroke-linecap", "round").attr("stroke-linejoin", "round");
    root.child(std::move(road));
    root.child(circle(0.6 * w, 0.45 * h, 0.06 * std::min(w, h), "#ff3b30"));
    return root;
}

svg::SvgNode placeholder_icon(double size)
{
    double s = std::max(size, 1.0);
    SvgNode root("svg");
    root.attr("xmlns", "http://www.w3.org/2000/svg");
    root.attr("width", fmt(s)).attr("height", fmt(s));
    root.attr("viewBox", "0 0 24 24");
    SvgNode ring("circle");
    ring.attr("cx", "12").attr("cy", "12").attr("r", "9");
    ring.attr("fill", "none").attr("stroke", "currentColor").attr("stroke-width", "2");
    root.child(std::move(ring));
    root.child(circle(12, 12, 3.5, "currentColor"));
    return root;
}

} // namespace wf::charts
