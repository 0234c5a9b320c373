#include "widgetforge/dsl.hpp"

#include <cmath>
#include <cstdlib>

namespace wf::dsl {

namespace {

Json canonicalize_prop_value(const Json& j)
{
    if (json_is_number(j))
        return canonical_number(j.get<double>());
    if (j.is_array()) {
        Json out = Json::array();
        for (const auto& e : j)
            out.push_back(canonicalize_prop_value(e));
        return out;
    }
    if (j.is_object()) {
        Json out = Json::object();
        for (auto it = j.begin(); it != j.end(); ++it)
            out[it.key()] = canonicalize_prop_value(it.value());
        return out;
    }
    return j;
}

std::pair<size_t, size_t> line_col(const std::string& text, size_t byte)
{
    size_t line = 1;
    size_t col = 1;
    size_t limit = std::min(byte, text.size());
    for (size_t i = 0; i < limit; ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return { line, col };
}

// Returns true when the value landed in the typed slot; otherwise the raw
// value is stashed in `loose` for validate/repair to deal with.
bool take_number(const Json& j, const std::string& key, double& out, LooseMap& loose)
{
    if (json_is_number(j)) {
        out = j.get<double>();
        return true;
    }
    loose[key] = j;
    return false;
}

void take_flex(const Json& j, const std::string& key, FlexSpec& out, LooseMap& loose)
{
    if (json_is_number(j)) {
        out.weight = j.get<double>();
        return;
    }
    if (j.is_string() && j.get_ref<const std::string&>() == "none") {
        out.weight = 0.0;
        return;
    }
    loose[key] = j;
}

void take_dimension(const Json& j, const std::string& key, std::optional<Dimension>& out, LooseMap& loose)
{
    if (json_is_number(j)) {
        out = Dimension { Dimension::Unit::Px, j.get<double>() };
        return;
    }
    if (j.is_string()) {
        const std::string& s = j.get_ref<const std::string&>();
        if (!s.empty() && s.back() == '%') {
            Json prefix = Json(s.substr(0, s.size() - 1));
            if (auto v = numeric_string_value(prefix)) {
                out = Dimension { Dimension::Unit::Percent, *v };
                return;
            }
        }
    }
    loose[key] = j;
}

void take_color(const Json& j, const std::string& key, std::optional<std::string>& out, LooseMap& loose)
{
    if (j.is_string()) {
        out = lowercase_hex(j.get_ref<const std::string&>());
        return;
    }
    loose[key] = j;
}

ContainerNode parse_container(const Json& j, const std::string& path);
LeafNode parse_leaf(const Json& j, const std::string& path);

Node parse_node_impl(const Json& j, const std::string& path)
{
    if (!j.is_object())
        throw Error(ErrorCode::SchemaError, "node must be an object", path);
    auto type_it = j.find("type");
    if (type_it == j.end() || !type_it->is_string())
        throw Error(ErrorCode::SchemaError, "node requires a string \"type\"", path);
    const std::string& type = type_it->get_ref<const std::string&>();
    if (type == "container")
        return Node { parse_container(j, path) };
    if (type == "leaf")
        return Node { parse_leaf(j, path) };
    throw Error(ErrorCode::SchemaError, "node type must be \"container\" or \"leaf\", got \"" + type + "\"", path);
}

ContainerNode parse_container(const Json& j, const std::string& path)
{
    ContainerNode node;
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string& key = it.key();
        const Json& v = it.value();
        if (key == "type")
            continue;
        if (key == "direction") {
            if (v.is_string()) {
                const std::string& s = v.get_ref<const std::string&>();
                if (s == "row") {
                    node.direction = Direction::Row;
                    continue;
                }
                if (s == "col") {
                    node.direction = Direction::Col;
                    continue;
                }
            }
            node.loose[key] = v;
        } else if (key == "gap") {
            take_number(v, key, node.gap, node.loose);
        } else if (key == "flex") {
            take_flex(v, key, node.flex, node.loose);
        } else if (key == "width") {
            take_dimension(v, key, node.width, node.loose);
        } else if (key == "height") {
            take_dimension(v, key, node.height, node.loose);
        } else if (key == "padding") {
            take_number(v, key, node.padding, node.loose);
        } else if (key == "backgroundColor") {
            take_color(v, key, node.background_color, node.loose);
        } else if (key == "borderRadius") {
            double out = 0.0;
            if (take_number(v, key, out, node.loose))
                node.border_radius = out;
        } else if (key == "children") {
            if (!v.is_array())
                throw Error(ErrorCode::SchemaError, "children must be an array", path + ".children");
            size_t i = 0;
            for (const auto& child : v) {
                node.children.push_back(parse_node_impl(child, path + ".children[" + std::to_string(i) + "]"));
                ++i;
            }
        } else {
            node.loose[key] = v;
        }
    }
    return node;
}

LeafNode parse_leaf(const Json& j, const std::string& path)
{
    LeafNode node;
    auto comp_it = j.find("component");
    if (comp_it == j.end() || !comp_it->is_string())
        throw Error(ErrorCode::SchemaError, "leaf requires a string \"component\"", path);
    auto kind = component_from_string(comp_it->get_ref<const std::string&>());
    if (!kind)
        throw Error(ErrorCode::UnknownComponent,
                    "unknown component \"" + comp_it->get<std::string>() + "\"", path);
    node.component = *kind;
    const KindSchema& schema = schema_for(node.component);

    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string& key = it.key();
        const Json& v = it.value();
        if (key == "type" || key == "component")
            continue;
        if (key == "flex") {
            take_flex(v, key, node.flex, node.loose);
        } else if (key == "width") {
            take_dimension(v, key, node.width, node.loose);
        } else if (key == "height") {
            take_dimension(v, key, node.height, node.loose);
        } else if (key == "content") {
            if (v.is_string())
                node.content = v.get<std::string>();
            else
                node.loose[key] = v;
        } else if (key == "props") {
            if (!v.is_object())
                throw Error(ErrorCode::SchemaError, "props must be an object", path + ".props");
            for (auto pit = v.begin(); pit != v.end(); ++pit) {
                Json value = canonicalize_prop_value(pit.value());
                const PropSpec* ps = schema.find(pit.key());
                if (ps && (ps->type == PropType::Color) && value.is_string())
                    value = lowercase_hex(value.get_ref<const std::string&>());
                node.props[pit.key()] = std::move(value);
            }
        } else {
            node.loose[key] = v;
        }
    }
    return node;
}

} // namespace

Node parse_node(const Json& j, const std::string& path)
{
    return parse_node_impl(j, path);
}

WidgetSpec parse_widget_dsl(const std::string& text)
{
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        auto [line, col] = line_col(text, e.byte > 0 ? e.byte - 1 : 0);
        throw Error(ErrorCode::SyntaxError,
                    "malformed JSON at line " + std::to_string(line) + ", column " + std::to_string(col));
    }
    if (!doc.is_object())
        throw Error(ErrorCode::SchemaError, "document must be a JSON object", "");
    auto wit = doc.find("widget");
    if (wit == doc.end() || !wit->is_object())
        throw Error(ErrorCode::SchemaError, "document requires a \"widget\" object", "");

    WidgetSpec spec;
    bool saw_background = false;
    bool saw_aspect = false;
    for (auto it = wit->begin(); it != wit->end(); ++it) {
        const std::string& key = it.key();
        const Json& v = it.value();
        if (key == "backgroundColor") {
            std::optional<std::string> c;
            take_color(v, key, c, spec.loose);
            if (c) {
                spec.background_color = *c;
                saw_background = true;
            }
        } else if (key == "borderRadius") {
            take_number(v, key, spec.border_radius, spec.loose);
        } else if (key == "padding") {
            take_number(v, key, spec.padding, spec.loose);
        } else if (key == "aspectRatio") {
            if (take_number(v, key, spec.aspect_ratio, spec.loose))
                saw_aspect = true;
        } else if (key == "root") {
            spec.root = parse_node_impl(v, "root");
        } else {
            spec.loose[key] = v;
        }
    }
    if (!saw_background)
        spec.loose.emplace("backgroundColor", Json()); // marks the field as absent for validate/repair
    if (!saw_aspect && spec.loose.find("aspectRatio") == spec.loose.end())
        spec.loose.emplace("aspectRatio", Json());
    return spec;
}

} // namespace wf::dsl
