#include "widgetforge/codegen.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <utility>

#include "widgetforge/charts.hpp"
#include "widgetforge/error.hpp"
#include "widgetforge/layout.hpp"
#include "widgetforge/svg.hpp"
#include "widgetforge/util.hpp"

namespace wf::codegen {

namespace {

using dsl::ComponentKind;
using dsl::ContainerNode;
using dsl::Dimension;
using dsl::Json;
using dsl::LeafNode;
using svg::SvgNode;

using StylePairs = std::vector<std::pair<std::string, std::string>>;

std::string fmt(double v) { return format_number(v); }
std::string px(double v) { return fmt(v) + "px"; }

std::uint64_t style_hash(const StylePairs& pairs)
{
    std::uint64_t h = kFnvOffset;
    for (const auto& [k, v] : pairs)
        h = fnv1a64(k + "=" + v + ";", h);
    return h;
}

std::string dim_css(const Dimension& d)
{
    if (d.unit == Dimension::Unit::Px)
        return px(std::max(d.value, 0.0));
    return fmt(d.value) + "%";
}

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

std::string first_codepoint(const std::string& s)
{
    if (s.empty())
        return s;
    size_t len = 1;
    while (len < s.size() && (static_cast<unsigned char>(s[len]) & 0xC0) == 0x80)
        ++len;
    return s.substr(0, len);
}

// Generated document tree: plain divs with an optional inline drawing.
struct Element {
    std::string tag = "div";
    std::string class_name;
    std::string wf_id;
    StylePairs style;
    std::string text;
    bool has_text = false;
    std::vector<Element> children;
    std::optional<SvgNode> drawing;
};

struct IconFile {
    std::string view_box;
    std::vector<std::string> paths;
};

std::optional<IconFile> parse_icon_file(const std::string& file)
{
    std::ifstream in(file, std::ios::binary);
    if (!in)
        return std::nullopt;
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();

    IconFile icon;
    icon.view_box = "0 0 24 24";
    size_t vb = text.find("viewBox=\"");
    if (vb != std::string::npos) {
        size_t start = vb + 9;
        size_t end = text.find('"', start);
        if (end != std::string::npos)
            icon.view_box = text.substr(start, end - start);
    }
    size_t pos = 0;
    while ((pos = text.find(" d=\"", pos)) != std::string::npos) {
        size_t start = pos + 4;
        size_t end = text.find('"', start);
        if (end == std::string::npos)
            break;
        icon.paths.push_back(text.substr(start, end - start));
        pos = end + 1;
    }
    if (icon.paths.empty())
        return std::nullopt;
    return icon;
}

SvgNode icon_drawing(const IconFile& icon, double size)
{
    SvgNode root("svg");
    root.attr("xmlns", "http://www.w3.org/2000/svg");
    root.attr("width", fmt(size)).attr("height", fmt(size));
    root.attr("viewBox", icon.view_box);
    root.attr("display", "block");
    for (const auto& d : icon.paths) {
        SvgNode path("path");
        path.attr("d", d).attr("fill", "currentColor");
        root.child(std::move(path));
    }
    return root;
}

struct Emitter {
    const layout::LayoutTree& tree;
    const EmitOptions& opts;
    std::vector<StructuralRecord> manifest;
    std::vector<std::string> warnings;
    std::map<std::string, std::optional<IconFile>> icon_cache;

    const layout::Box& box_at(const std::string& path)
    {
        static const layout::Box zero;
        const layout::Box* b = tree.find(path);
        return b ? *b : zero;
    }

    // Icon names carry a set prefix ("sf:SfHeart"); files are looked up by
    // the bare name.
    const std::optional<IconFile>& icon_for(const std::string& name)
    {
        auto it = icon_cache.find(name);
        if (it != icon_cache.end())
            return it->second;
        std::string base = name;
        size_t colon = base.rfind(':');
        if (colon != std::string::npos)
            base = base.substr(colon + 1);
        std::optional<IconFile> icon;
        if (!opts.icon_dir.empty() && !base.empty())
            icon = parse_icon_file(opts.icon_dir + "/" + base + ".svg");
        return icon_cache.emplace(name, std::move(icon)).first->second;
    }

    void add_sizing(StylePairs& st, const std::optional<Dimension>& w,
                    const std::optional<Dimension>& h, double weight, bool parent_row,
                    const layout::Box& box)
    {
        const std::optional<Dimension>& main = parent_row ? w : h;
        const std::optional<Dimension>& cross = parent_row ? h : w;
        double solved_main = parent_row ? box.w : box.h;

        std::string main_css;
        std::string flex_css = "0 0 auto";
        if (main)
            main_css = dim_css(*main);
        else if (weight > 0.0)
            flex_css = fmt(weight) + " 0 0px";
        else
            main_css = px(solved_main);

        std::string width_css = parent_row ? main_css : (cross ? dim_css(*cross) : "");
        std::string height_css = parent_row ? (cross ? dim_css(*cross) : "") : main_css;
        if (!width_css.empty())
            st.emplace_back("width", width_css);
        if (!height_css.empty())
            st.emplace_back("height", height_css);
        st.emplace_back("flex", flex_css);
    }

    Element build_node(const dsl::Node& node, const std::string& path, bool parent_row)
    {
        if (node.is_container())
            return build_container(node.container(), path, false, parent_row);
        return build_leaf(node.leaf(), path, parent_row);
    }

    Element build_container(const ContainerNode& c, const std::string& path, bool is_root,
                            bool parent_row)
    {
        bool row = c.direction.value_or(dsl::Direction::Col) == dsl::Direction::Row;

        Element e;
        e.wf_id = path;
        e.style.emplace_back("box-sizing", "border-box");
        e.style.emplace_back("display", "flex");
        e.style.emplace_back("flex-direction", row ? "row" : "column");
        if (c.gap > 0.0)
            e.style.emplace_back("gap", px(c.gap));
        if (c.padding > 0.0)
            e.style.emplace_back("padding", px(c.padding));
        if (c.background_color)
            e.style.emplace_back("background-color", *c.background_color);
        if (c.border_radius && *c.border_radius > 0.0)
            e.style.emplace_back("border-radius", px(*c.border_radius));
        if (is_root)
            e.style.emplace_back("flex", "1 1 0px");
        else
            add_sizing(e.style, c.width, c.height, c.flex.weight, parent_row, box_at(path));

        manifest.push_back({ path, "container", style_hash(e.style) });
        for (size_t i = 0; i < c.children.size(); ++i)
            e.children.push_back(build_node(c.children[i], path + "." + std::to_string(i), row));
        return e;
    }

    Element build_leaf(const LeafNode& leaf, const std::string& path, bool parent_row)
    {
        const layout::Box& box = box_at(path);

        Element e;
        e.wf_id = path;
        e.style.emplace_back("box-sizing", "border-box");

        switch (leaf.component) {
        case ComponentKind::Text: {
            e.style.emplace_back("font-size", px(num_prop(leaf, "fontSize")));
            e.style.emplace_back("line-height", "1.2");
            e.style.emplace_back("font-weight", fmt(num_prop(leaf, "fontWeight")));
            e.style.emplace_back("color", str_prop(leaf, "color"));
            e.text = leaf.content.value_or("");
            e.has_text = true;
            break;
        }
        case ComponentKind::Icon: {
            e.style.emplace_back("display", "flex");
            e.style.emplace_back("align-items", "center");
            e.style.emplace_back("justify-content", "center");
            e.style.emplace_back("color", str_prop(leaf, "color"));
            double size = num_prop(leaf, "size");
            std::string name = str_prop(leaf, "name");
            const auto& icon = icon_for(name);
            if (icon) {
                e.drawing = icon_drawing(*icon, size);
            } else {
                warnings.push_back("icon \"" + name + "\" not found at " + path
                                   + "; placeholder used");
                e.drawing = charts::placeholder_icon(size);
            }
            break;
        }
        case ComponentKind::AppLogo: {
            double size = num_prop(leaf, "size");
            e.style.emplace_back("display", "flex");
            e.style.emplace_back("align-items", "center");
            e.style.emplace_back("justify-content", "center");
            e.style.emplace_back("background-color", str_prop(leaf, "backgroundColor"));
            e.style.emplace_back("border-radius", px(0.22 * size));
            e.style.emplace_back("color", str_prop(leaf, "color"));
            std::string name = str_prop(leaf, "icon");
            const IconFile* icon = nullptr;
            if (!name.empty()) {
                const auto& found = icon_for(name);
                if (found)
                    icon = &*found;
                else
                    warnings.push_back("icon \"" + name + "\" not found at " + path
                                       + "; logo letter used");
            }
            if (icon) {
                e.drawing = icon_drawing(*icon, 0.6 * size);
            } else {
                e.style.emplace_back("font-family", "sans-serif");
                e.style.emplace_back("font-size", px(0.5 * size));
                e.style.emplace_back("font-weight", "600");
                e.text = first_codepoint(str_prop(leaf, "name"));
                e.has_text = true;
            }
            break;
        }
        case ComponentKind::Image:
            e.drawing = charts::image_glyph(box.w, box.h);
            break;
        case ComponentKind::MapImage:
            e.drawing = charts::map_glyph(box.w, box.h);
            break;
        case ComponentKind::Button: {
            e.style.emplace_back("display", "flex");
            e.style.emplace_back("align-items", "center");
            e.style.emplace_back("justify-content", "center");
            e.style.emplace_back("padding", px(num_prop(leaf, "padding")));
            e.style.emplace_back("background-color", str_prop(leaf, "backgroundColor"));
            e.style.emplace_back("color", str_prop(leaf, "color"));
            e.style.emplace_back("border-radius", px(num_prop(leaf, "borderRadius")));
            e.style.emplace_back("font-size", px(num_prop(leaf, "fontSize")));
            e.style.emplace_back("font-weight", fmt(num_prop(leaf, "fontWeight")));
            std::string text = str_prop(leaf, "content");
            std::string icon_name = str_prop(leaf, "icon");
            if (!text.empty()) {
                e.text = text;
                e.has_text = true;
            } else if (!icon_name.empty()) {
                double size = num_prop(leaf, "fontSize") + 2.0;
                const auto& icon = icon_for(icon_name);
                if (icon) {
                    e.drawing = icon_drawing(*icon, size);
                } else {
                    warnings.push_back("icon \"" + icon_name + "\" not found at " + path
                                       + "; placeholder used");
                    e.drawing = charts::placeholder_icon(size);
                }
            }
            break;
        }
        case ComponentKind::Divider:
            e.style.emplace_back("background-color", str_prop(leaf, "color"));
            break;
        case ComponentKind::Indicator:
            e.style.emplace_back("background-color", str_prop(leaf, "color"));
            e.style.emplace_back("border-radius", "2px");
            break;
        case ComponentKind::ProgressBar: {
            e.style.emplace_back("background-color", str_prop(leaf, "trackColor"));
            e.style.emplace_back("border-radius", px(box.h / 2.0));
            Element fill;
            fill.style.emplace_back("box-sizing", "border-box");
            fill.style.emplace_back("width", fmt(100.0 * std::clamp(num_prop(leaf, "value"), 0.0, 1.0)) + "%");
            fill.style.emplace_back("height", "100%");
            fill.style.emplace_back("background-color", str_prop(leaf, "color"));
            fill.style.emplace_back("border-radius", px(box.h / 2.0));
            e.children.push_back(std::move(fill));
            break;
        }
        default:
            if (charts::is_svg_kind(leaf.component))
                e.drawing = charts::chart_svg(leaf, box.w, box.h);
            break;
        }

        add_sizing(e.style, leaf.width, leaf.height, leaf.flex.weight, parent_row, box);
        manifest.push_back({ path, std::string(dsl::to_string(leaf.component)), style_hash(e.style) });
        return e;
    }
};

std::string style_attr(const StylePairs& st)
{
    std::string out;
    for (const auto& [k, v] : st) {
        if (!out.empty())
            out += ";";
        out += k + ":" + v;
    }
    return out;
}

std::string style_object(const StylePairs& st)
{
    std::string out = "{{";
    bool first = true;
    for (const auto& [k, v] : st) {
        if (!first)
            out += ", ";
        first = false;
        out += svg::camel_case(k) + ": " + svg::jsx_string(v);
    }
    out += "}}";
    return out;
}

void render_element(const Element& e, svg::Dialect dialect, int indent, std::string& out)
{
    std::string pad(static_cast<size_t>(indent) * 2, ' ');
    bool jsx = dialect == svg::Dialect::Jsx;

    out += pad + "<" + e.tag;
    if (!e.class_name.empty())
        out += (jsx ? " className=\"" : " class=\"") + svg::escape_attr(e.class_name) + "\"";
    if (!e.wf_id.empty())
        out += " data-wf-id=\"" + svg::escape_attr(e.wf_id) + "\"";
    if (!e.style.empty()) {
        if (jsx)
            out += " style=" + style_object(e.style);
        else
            out += " style=\"" + svg::escape_attr(style_attr(e.style)) + "\"";
    }

    bool empty = e.children.empty() && !e.drawing && !e.has_text;
    if (empty) {
        out += jsx ? "/>" : "></" + e.tag + ">";
        return;
    }
    out += ">";

    bool inline_text = e.has_text && e.children.empty() && !e.drawing;
    if (inline_text) {
        out += jsx ? "{" + svg::jsx_string(e.text) + "}" : svg::escape_text(e.text);
        out += "</" + e.tag + ">";
        return;
    }

    for (const auto& child : e.children) {
        out += "\n";
        render_element(child, dialect, indent + 1, out);
    }
    if (e.drawing) {
        out += "\n";
        out += svg::render_svg(*e.drawing, dialect, indent + 1);
    }
    if (e.has_text) {
        out += "\n" + pad + "  ";
        out += jsx ? "{" + svg::jsx_string(e.text) + "}" : svg::escape_text(e.text);
    }
    out += "\n" + pad + "</" + e.tag + ">";
}

std::string render_html(const Element& widget)
{
    std::string out;
    out += "<html lang=\"en\">\n";
    out += "<head>\n";
    out += "<meta charset=\"utf-8\">\n";
    out += "<title>widget</title>\n";
    out += "</head>\n";
    out += "<body>\n";
    render_element(widget, svg::Dialect::Html, 0, out);
    out += "\n</body>\n";
    out += "</html>";
    return out;
}

std::string render_react(const Element& widget)
{
    std::string out;
    out += "export default function Widget() {\n";
    out += "  return (\n";
    render_element(widget, svg::Dialect::Jsx, 2, out);
    out += "\n  );\n";
    out += "}\n";
    return out;
}

} // namespace

dsl::Json manifest_to_json(const std::vector<StructuralRecord>& manifest)
{
    Json arr = Json::array();
    for (const auto& rec : manifest) {
        char hex[17];
        std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(rec.style_hash));
        arr.push_back({ { "id", rec.id }, { "kind", rec.kind }, { "styleHash", hex } });
    }
    return arr;
}

EmitResult emit(const dsl::WidgetSpec& spec, const EmitOptions& opts)
{
    double lw = opts.layout_w > 0.0 ? opts.layout_w : 360.0;
    double ar = spec.aspect_ratio > 0.0 ? spec.aspect_ratio : 1.0;
    double lh = opts.layout_h > 0.0 ? opts.layout_h : lw / ar;

    layout::LayoutTree tree = layout::solve_layout(spec, lw, lh);

    double fw = opts.frame_w > 0.0 ? opts.frame_w : lw;
    double fh = opts.frame_h > 0.0 ? opts.frame_h : lh;
    double sx = fw / lw;
    double sy = fh / lh;

    Emitter em { tree, opts, {}, {}, {} };

    Element frame;
    frame.wf_id = "shell";
    frame.style.emplace_back("box-sizing", "border-box");
    frame.style.emplace_back("width", px(lw));
    frame.style.emplace_back("height", px(lh));
    if (sx != 1.0 || sy != 1.0) {
        frame.style.emplace_back("transform", "scale(" + fmt(sx) + "," + fmt(sy) + ")");
        frame.style.emplace_back("transform-origin", "0 0");
    }
    frame.style.emplace_back("display", "flex");
    frame.style.emplace_back("flex-direction", "column");
    if (spec.padding > 0.0)
        frame.style.emplace_back("padding", px(spec.padding));
    frame.style.emplace_back("background-color", spec.background_color);
    if (spec.border_radius > 0.0)
        frame.style.emplace_back("border-radius", px(spec.border_radius));

    em.manifest.push_back({ "shell", "shell", style_hash(frame.style) });
    if (spec.root) {
        if (spec.root->is_container())
            frame.children.push_back(em.build_container(spec.root->container(), "root", true, false));
        else
            frame.children.push_back(em.build_node(*spec.root, "root", false));
    }

    Element widget;
    widget.class_name = "widget";
    widget.style.emplace_back("box-sizing", "border-box");
    widget.style.emplace_back("width", px(fw));
    widget.style.emplace_back("height", px(fh));
    widget.children.push_back(std::move(frame));

    EmitResult result;
    result.source = opts.target == EmitTarget::Html ? render_html(widget) : render_react(widget);
    result.manifest = std::move(em.manifest);
    result.warnings = std::move(em.warnings);
    return result;
}

} // namespace wf::codegen
