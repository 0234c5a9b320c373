#include "widgetforge/dsl.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <cstdlib>

namespace wf::dsl {

namespace {

struct KindName {
    ComponentKind kind;
    std::string_view name;
};

constexpr std::array<KindName, kComponentKindCount> kKindNames { {
    { ComponentKind::Text, "Text" },
    { ComponentKind::Icon, "Icon" },
    { ComponentKind::AppLogo, "AppLogo" },
    { ComponentKind::Image, "Image" },
    { ComponentKind::MapImage, "MapImage" },
    { ComponentKind::Button, "Button" },
    { ComponentKind::Checkbox, "Checkbox" },
    { ComponentKind::Switch, "Switch" },
    { ComponentKind::Slider, "Slider" },
    { ComponentKind::Divider, "Divider" },
    { ComponentKind::Indicator, "Indicator" },
    { ComponentKind::ProgressBar, "ProgressBar" },
    { ComponentKind::ProgressRing, "ProgressRing" },
    { ComponentKind::Sparkline, "Sparkline" },
    { ComponentKind::BarChart, "BarChart" },
    { ComponentKind::StackedBarChart, "StackedBarChart" },
    { ComponentKind::LineChart, "LineChart" },
    { ComponentKind::PieChart, "PieChart" },
    { ComponentKind::RadarChart, "RadarChart" },
} };

PropSpec num(std::string name, double def, double lo = -1.0e308, double hi = 1.0e308)
{
    PropSpec p;
    p.name = std::move(name);
    p.type = PropType::Number;
    p.default_value = def;
    p.min_value = lo;
    p.max_value = hi;
    return p;
}

PropSpec str(std::string name, std::string def = {})
{
    PropSpec p;
    p.name = std::move(name);
    p.type = PropType::String;
    p.default_value = std::move(def);
    return p;
}

PropSpec color(std::string name, std::string def)
{
    PropSpec p;
    p.name = std::move(name);
    p.type = PropType::Color;
    p.default_value = std::move(def);
    return p;
}

PropSpec boolean(std::string name, bool def)
{
    PropSpec p;
    p.name = std::move(name);
    p.type = PropType::Bool;
    p.default_value = def;
    return p;
}

PropSpec data_array(std::string name, Json def)
{
    PropSpec p;
    p.name = std::move(name);
    p.type = PropType::NumberArray;
    p.required = true;
    p.nonempty = true;
    p.default_value = std::move(def);
    return p;
}

PropSpec opt_array(std::string name, PropType type, Json def = Json::array())
{
    PropSpec p;
    p.name = std::move(name);
    p.type = type;
    p.default_value = std::move(def);
    return p;
}

std::vector<KindSchema> build_schemas()
{
    std::vector<KindSchema> out(kComponentKindCount);
    auto set = [&](ComponentKind k, bool takes_content, std::vector<PropSpec> props) {
        KindSchema s;
        s.kind = k;
        s.takes_content = takes_content;
        s.props = std::move(props);
        out[static_cast<size_t>(k)] = std::move(s);
    };

    set(ComponentKind::Text, true,
        { num("fontSize", 14.0, 1.0), color("color", "#000000"), num("fontWeight", 400.0, 100.0, 900.0) });
    set(ComponentKind::Icon, false,
        { str("name", "sf:SfCircle"), num("size", 24.0, 1.0), color("color", "#000000") });
    set(ComponentKind::AppLogo, false,
        { str("icon"), str("name", "App"), num("size", 40.0, 1.0), color("backgroundColor", "#007aff"),
          color("color", "#ffffff") });
    set(ComponentKind::Image, false, { str("src") });
    set(ComponentKind::MapImage, false, { str("src") });
    set(ComponentKind::Button, false,
        { str("icon"), str("content"), color("backgroundColor", "#007aff"), color("color", "#ffffff"),
          num("borderRadius", 12.0, 0.0), num("fontSize", 14.0, 1.0), num("fontWeight", 500.0, 100.0, 900.0),
          num("padding", 8.0, 0.0) });
    set(ComponentKind::Checkbox, false,
        { boolean("state", false), color("color", "#007aff"), num("size", 18.0, 1.0) });
    set(ComponentKind::Switch, false, { boolean("state", false), color("color", "#34c759") });
    set(ComponentKind::Slider, false, { num("value", 0.5, 0.0, 1.0), color("color", "#007aff") });
    set(ComponentKind::Divider, false, { color("color", "#d1d1d6"), num("thickness", 1.0, 0.0) });
    set(ComponentKind::Indicator, false, { color("color", "#ff9500") });
    set(ComponentKind::ProgressBar, false,
        { num("value", 0.5, 0.0, 1.0), color("color", "#007aff"), color("trackColor", "#e5e5ea") });
    set(ComponentKind::ProgressRing, false,
        { num("value", 0.5, 0.0, 1.0), color("color", "#007aff"), color("trackColor", "#e5e5ea"),
          num("size", 36.0, 1.0), num("thickness", 4.0, 0.5) });
    set(ComponentKind::Sparkline, false,
        { data_array("data", Json::array({ 0, 2, 1, 3, 2, 4 })), color("color", "#007aff") });
    set(ComponentKind::BarChart, false,
        { data_array("data", Json::array({ 10, 20, 15, 30 })), opt_array("labels", PropType::StringArray),
          color("color", "#007aff"), opt_array("colors", PropType::ColorArray), num("max", 0.0, 0.0) });
    {
        PropSpec stacked;
        stacked.name = "data";
        stacked.type = PropType::Number2D;
        stacked.required = true;
        stacked.nonempty = true;
        stacked.default_value = Json::array({ Json::array({ 4, 6, 5 }), Json::array({ 2, 3, 4 }) });
        set(ComponentKind::StackedBarChart, false,
            { stacked, opt_array("labels", PropType::StringArray),
              opt_array("colors", PropType::ColorArray,
                        Json::array({ "#007aff", "#34c759", "#ff9500", "#ff3b30" })) });
    }
    set(ComponentKind::LineChart, false,
        { data_array("data", Json::array({ 3, 6, 4, 8, 7, 10 })), opt_array("labels", PropType::StringArray),
          color("color", "#007aff") });
    set(ComponentKind::PieChart, false,
        { data_array("data", Json::array({ 40, 30, 20, 10 })),
          opt_array("colors", PropType::ColorArray,
                    Json::array({ "#007aff", "#34c759", "#ff9500", "#ff3b30" })) });
    set(ComponentKind::RadarChart, false,
        { data_array("data", Json::array({ 3, 5, 4, 4, 5 })), opt_array("labels", PropType::StringArray),
          color("color", "#007aff") });

    return out;
}

const std::vector<KindSchema>& schemas()
{
    static const std::vector<KindSchema> s = build_schemas();
    return s;
}

} // namespace

std::optional<ComponentKind> component_from_string(std::string_view name)
{
    for (const auto& k : kKindNames) {
        if (k.name == name)
            return k.kind;
    }
    return std::nullopt;
}

std::string_view to_string(ComponentKind kind)
{
    return kKindNames[static_cast<size_t>(kind)].name;
}

const std::vector<ComponentKind>& all_component_kinds()
{
    static const std::vector<ComponentKind> kinds = [] {
        std::vector<ComponentKind> v;
        for (const auto& k : kKindNames)
            v.push_back(k.kind);
        return v;
    }();
    return kinds;
}

std::string_view to_string(Direction d)
{
    return d == Direction::Row ? "row" : "col";
}

const PropSpec* KindSchema::find(std::string_view name) const
{
    for (const auto& p : props) {
        if (p.name == name)
            return &p;
    }
    return nullptr;
}

const KindSchema& schema_for(ComponentKind kind)
{
    return schemas()[static_cast<size_t>(kind)];
}

bool json_is_number(const Json& j)
{
    return j.is_number_integer() || j.is_number_unsigned() || j.is_number_float();
}

std::optional<double> numeric_string_value(const Json& j)
{
    if (!j.is_string())
        return std::nullopt;
    const std::string& s = j.get_ref<const std::string&>();
    if (s.empty())
        return std::nullopt;
    char* end = nullptr;
    double v = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size() || !std::isfinite(v))
        return std::nullopt;
    return v;
}

Json canonical_number(double v)
{
    double r = std::round(v);
    if (std::abs(v - r) < 1e-9 && std::abs(v) < 9.0e15)
        return Json(static_cast<int64_t>(r));
    return Json(v);
}

bool is_hex_color(std::string_view s)
{
    if (s.size() != 4 && s.size() != 7)
        return false;
    if (s[0] != '#')
        return false;
    return std::all_of(s.begin() + 1, s.end(), [](unsigned char c) {
        return std::isdigit(c) || (std::tolower(c) >= 'a' && std::tolower(c) <= 'f');
    });
}

std::string lowercase_hex(std::string_view s)
{
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

bool operator==(const LeafNode& a, const LeafNode& b)
{
    return a.component == b.component && a.flex == b.flex && a.width == b.width && a.height == b.height
        && a.props == b.props && a.content == b.content && a.loose == b.loose;
}

bool operator==(const ContainerNode& a, const ContainerNode& b)
{
    return a.direction == b.direction && a.gap == b.gap && a.flex == b.flex && a.width == b.width
        && a.height == b.height && a.padding == b.padding && a.background_color == b.background_color
        && a.border_radius == b.border_radius && a.loose == b.loose && a.children == b.children;
}

bool operator==(const Node& a, const Node& b)
{
    return a.value == b.value;
}

bool operator==(const WidgetSpec& a, const WidgetSpec& b)
{
    return a.background_color == b.background_color && a.border_radius == b.border_radius
        && a.padding == b.padding && a.aspect_ratio == b.aspect_ratio && a.loose == b.loose
        && a.root == b.root;
}

bool ValidationReport::has_errors() const
{
    return std::any_of(findings.begin(), findings.end(),
                       [](const Finding& f) { return f.severity == Severity::Error; });
}

Json ValidationReport::to_json() const
{
    Json arr = Json::array();
    for (const auto& f : findings) {
        arr.push_back({ { "path", f.path },
                        { "code", f.code },
                        { "message", f.message },
                        { "severity", f.severity == Severity::Error ? "error" : "warning" } });
    }
    return arr;
}

Json RepairLog::to_json() const
{
    Json arr = Json::array();
    for (const auto& e : entries)
        arr.push_back({ { "path", e.path }, { "rule", e.rule }, { "detail", e.detail } });
    return arr;
}

} // namespace wf::dsl
