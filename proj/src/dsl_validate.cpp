#include "widgetforge/dsl.hpp"

#include <cmath>

namespace wf::dsl {

namespace {

struct Collector {
    std::vector<Finding>& out;

    void error(std::string path, std::string code, std::string message)
    {
        out.push_back({ std::move(path), std::move(code), std::move(message), Severity::Error });
    }
    void warning(std::string path, std::string code, std::string message)
    {
        out.push_back({ std::move(path), std::move(code), std::move(message), Severity::Warning });
    }
};

bool json_is_number(const Json& j)
{
    return j.is_number_integer() || j.is_number_unsigned() || j.is_number_float();
}

const char* known_container_keys[] = { "direction", "gap", "flex", "width", "height",
                                       "padding", "backgroundColor", "borderRadius", "children" };
const char* known_leaf_keys[] = { "flex", "width", "height", "props", "content" };

bool is_known_key(const std::string& key, bool container)
{
    if (container) {
        for (const char* k : known_container_keys)
            if (key == k)
                return true;
    } else {
        for (const char* k : known_leaf_keys)
            if (key == k)
                return true;
    }
    return false;
}

void check_loose(const LooseMap& loose, const std::string& path, bool container, Collector& c)
{
    for (const auto& [key, value] : loose) {
        if (is_known_key(key, container))
            c.error(path + "." + key, "WRONG_TYPE", "value does not match the declared type");
        else
            c.warning(path + "." + key, "UNKNOWN_KEY", "unknown key is not part of the schema");
    }
}

void check_dimension(const std::optional<Dimension>& dim, const std::string& path, Collector& c)
{
    if (!dim)
        return;
    if (dim->unit == Dimension::Unit::Px) {
        if (dim->value < 0.0)
            c.error(path, "NEGATIVE_DIMENSION", "dimension must be >= 0");
    } else {
        if (dim->value <= 0.0 || dim->value > 100.0)
            c.error(path, "BAD_PERCENT", "percent must lie in (0, 100]");
    }
}

void check_prop_value(const PropSpec& spec, const Json& v, const std::string& path, Collector& c)
{
    switch (spec.type) {
    case PropType::Number:
        if (!json_is_number(v)) {
            c.error(path, "WRONG_TYPE", "expected a number");
            return;
        }
        if (v.get<double>() < spec.min_value || v.get<double>() > spec.max_value)
            c.error(path, "OUT_OF_RANGE", "number outside the allowed range");
        return;
    case PropType::String:
        if (!v.is_string())
            c.error(path, "WRONG_TYPE", "expected a string");
        return;
    case PropType::Color:
        if (!v.is_string()) {
            c.error(path, "WRONG_TYPE", "expected a hex color string");
            return;
        }
        if (!is_hex_color(v.get_ref<const std::string&>()))
            c.error(path, "BAD_COLOR", "expected #rgb or #rrggbb");
        return;
    case PropType::Bool:
        if (!v.is_boolean())
            c.error(path, "WRONG_TYPE", "expected a boolean");
        return;
    case PropType::NumberArray: {
        if (!v.is_array()) {
            c.error(path, "WRONG_TYPE", "expected an array of numbers");
            return;
        }
        if (spec.nonempty && v.empty()) {
            c.error(path, "EMPTY_DATA", "array must not be empty");
            return;
        }
        for (size_t i = 0; i < v.size(); ++i) {
            if (!json_is_number(v[i]))
                c.error(path + "[" + std::to_string(i) + "]", "WRONG_TYPE", "expected a number");
        }
        return;
    }
    case PropType::Number2D: {
        if (!v.is_array()) {
            c.error(path, "WRONG_TYPE", "expected an array of number arrays");
            return;
        }
        if (spec.nonempty && v.empty()) {
            c.error(path, "EMPTY_DATA", "array must not be empty");
            return;
        }
        for (size_t i = 0; i < v.size(); ++i) {
            const Json& row = v[i];
            const std::string rp = path + "[" + std::to_string(i) + "]";
            if (!row.is_array()) {
                c.error(rp, "WRONG_TYPE", "expected an array of numbers");
                continue;
            }
            if (spec.nonempty && row.empty()) {
                c.error(rp, "EMPTY_DATA", "array must not be empty");
                continue;
            }
            for (size_t k = 0; k < row.size(); ++k) {
                if (!json_is_number(row[k]))
                    c.error(rp + "[" + std::to_string(k) + "]", "WRONG_TYPE", "expected a number");
            }
        }
        return;
    }
    case PropType::StringArray:
    case PropType::ColorArray: {
        if (!v.is_array()) {
            c.error(path, "WRONG_TYPE", "expected an array of strings");
            return;
        }
        for (size_t i = 0; i < v.size(); ++i) {
            const std::string ep = path + "[" + std::to_string(i) + "]";
            if (!v[i].is_string()) {
                c.error(ep, "WRONG_TYPE", "expected a string");
            } else if (spec.type == PropType::ColorArray
                       && !is_hex_color(v[i].get_ref<const std::string&>())) {
                c.error(ep, "BAD_COLOR", "expected #rgb or #rrggbb");
            }
        }
        return;
    }
    }
}

void validate_node_impl(const Node& node, const std::string& path, Collector& c);

void validate_container(const ContainerNode& node, const std::string& path, Collector& c)
{
    if (!node.direction && node.loose.find("direction") == node.loose.end())
        c.error(path + ".direction", "MISSING_DIRECTION", "container requires direction row|col");
    if (node.gap < 0.0)
        c.error(path + ".gap", "NEGATIVE_DIMENSION", "gap must be >= 0");
    if (node.padding < 0.0)
        c.error(path + ".padding", "NEGATIVE_DIMENSION", "padding must be >= 0");
    if (node.flex.weight < 0.0)
        c.error(path + ".flex", "NEGATIVE_FLEX", "flex weight must be >= 0");
    check_dimension(node.width, path + ".width", c);
    check_dimension(node.height, path + ".height", c);
    if (node.background_color && !is_hex_color(*node.background_color))
        c.error(path + ".backgroundColor", "BAD_COLOR", "expected #rgb or #rrggbb");
    if (node.border_radius && *node.border_radius < 0.0)
        c.error(path + ".borderRadius", "NEGATIVE_DIMENSION", "borderRadius must be >= 0");
    check_loose(node.loose, path, true, c);
    for (size_t i = 0; i < node.children.size(); ++i)
        validate_node_impl(node.children[i], path + ".children[" + std::to_string(i) + "]", c);
}

void validate_leaf(const LeafNode& node, const std::string& path, Collector& c)
{
    const KindSchema& schema = schema_for(node.component);
    if (node.flex.weight < 0.0)
        c.error(path + ".flex", "NEGATIVE_FLEX", "flex weight must be >= 0");
    check_dimension(node.width, path + ".width", c);
    check_dimension(node.height, path + ".height", c);

    if (schema.takes_content) {
        if (!node.content && node.loose.find("content") == node.loose.end())
            c.warning(path + ".content", "MISSING_CONTENT", "Text leaf has no content");
    } else if (node.content) {
        c.error(path + ".content", "CONTENT_ON_NON_TEXT",
                "content is only allowed on Text leaves");
    }

    for (const auto& [key, value] : node.props) {
        const PropSpec* ps = schema.find(key);
        if (!ps) {
            c.warning(path + ".props." + key, "UNKNOWN_PROP", "prop is not part of the schema");
            continue;
        }
        check_prop_value(*ps, value, path + ".props." + key, c);
    }
    for (const auto& ps : schema.props) {
        if (ps.required && node.props.find(ps.name) == node.props.end())
            c.error(path + ".props." + ps.name, "MISSING_PROP", "required prop is missing");
    }
    if (node.component == ComponentKind::Button) {
        auto icon = node.props.find("icon");
        auto text = node.props.find("content");
        if (icon != node.props.end() && text != node.props.end())
            c.error(path + ".props", "BUTTON_ICON_AND_TEXT",
                    "Button carries an icon or text, not both");
    }
    check_loose(node.loose, path, false, c);
}

void validate_node_impl(const Node& node, const std::string& path, Collector& c)
{
    if (node.is_container())
        validate_container(node.container(), path, c);
    else
        validate_leaf(node.leaf(), path, c);
}

} // namespace

ValidationReport validate_node(const Node& node, const std::string& path)
{
    ValidationReport report;
    Collector c { report.findings };
    validate_node_impl(node, path, c);
    return report;
}

ValidationReport validate(const WidgetSpec& spec)
{
    ValidationReport report;
    Collector c { report.findings };

    for (const auto& [key, value] : spec.loose) {
        bool known = key == "backgroundColor" || key == "borderRadius" || key == "padding"
            || key == "aspectRatio" || key == "root";
        if (!known) {
            c.warning("widget." + key, "UNKNOWN_KEY", "unknown key is not part of the schema");
        } else if (value.is_null()) {
            c.error("widget." + key, "MISSING_FIELD", "required shell field is missing");
        } else {
            c.error("widget." + key, "WRONG_TYPE", "value does not match the declared type");
        }
    }
    if (!is_hex_color(spec.background_color))
        c.error("widget.backgroundColor", "BAD_COLOR", "expected #rgb or #rrggbb");
    if (spec.border_radius < 0.0)
        c.error("widget.borderRadius", "NEGATIVE_DIMENSION", "borderRadius must be >= 0");
    if (spec.padding < 0.0)
        c.error("widget.padding", "NEGATIVE_DIMENSION", "padding must be >= 0");
    if (spec.aspect_ratio <= 0.0 && spec.loose.find("aspectRatio") == spec.loose.end())
        c.error("widget.aspectRatio", "NONPOSITIVE_ASPECT", "aspectRatio must be > 0");

    if (!spec.root) {
        c.error("root", "MISSING_ROOT", "widget requires a root container");
    } else if (!spec.root->is_container()) {
        c.error("root", "ROOT_NOT_CONTAINER", "root must be a container node");
    } else {
        validate_node_impl(*spec.root, "root", c);
    }
    return report;
}

} // namespace wf::dsl
