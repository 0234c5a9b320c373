#include "widgetforge/dsl.hpp"

#include <cmath>
#include <cstdlib>

namespace wf::dsl {

namespace {

std::optional<double> numeric_string(const Json& j)
{
    return numeric_string_value(j);
}

std::string number_text(double v)
{
    return canonical_number(v).dump();
}

struct Fixer {
    std::vector<RepairEntry>& log;

    void note(std::string path, std::string rule, std::string detail)
    {
        log.push_back({ std::move(path), std::move(rule), std::move(detail) });
    }
};

// Loose slots are processed in a fixed rule order: numeric-string coercion
// first, then drops/defaults, with negative clamps applied to whatever the
// coercion produced.
void fix_loose_number(LooseMap& loose, const std::string& key, double& target, bool clamp_nonneg,
                      const std::string& path, Fixer& f)
{
    auto it = loose.find(key);
    if (it == loose.end())
        return;
    if (auto v = numeric_string(it->second)) {
        target = *v;
        f.note(path + "." + key, "coerce_numeric_string", "\"" + it->second.get<std::string>() + "\" -> " + number_text(*v));
    } else if (!it->second.is_null()) {
        f.note(path + "." + key, "drop_invalid_value", "uncoercible value removed");
    }
    loose.erase(it);
    if (clamp_nonneg && target < 0.0) {
        f.note(path + "." + key, "clamp_negative", number_text(target) + " -> 0");
        target = 0.0;
    }
}

void clamp_nonneg(double& v, const std::string& path, Fixer& f)
{
    if (v < 0.0) {
        f.note(path, "clamp_negative", number_text(v) + " -> 0");
        v = 0.0;
    }
}

void fix_flex(FlexSpec& flex, LooseMap& loose, const std::string& path, Fixer& f)
{
    auto it = loose.find("flex");
    if (it != loose.end()) {
        if (auto v = numeric_string(it->second)) {
            flex.weight = *v;
            f.note(path + ".flex", "coerce_numeric_string",
                   "\"" + it->second.get<std::string>() + "\" -> " + number_text(*v));
        } else {
            flex.weight = 0.0;
            f.note(path + ".flex", "drop_invalid_value", "uncoercible flex reset to 0");
        }
        loose.erase(it);
    }
    if (flex.weight < 0.0) {
        f.note(path + ".flex", "clamp_negative", number_text(flex.weight) + " -> 0");
        flex.weight = 0.0;
    }
}

void fix_dimension(std::optional<Dimension>& dim, LooseMap& loose, const std::string& key,
                   const std::string& path, Fixer& f)
{
    auto it = loose.find(key);
    if (it != loose.end()) {
        if (auto v = numeric_string(it->second)) {
            dim = Dimension { Dimension::Unit::Px, *v };
            f.note(path + "." + key, "coerce_numeric_string",
                   "\"" + it->second.get<std::string>() + "\" -> " + number_text(*v) + "px");
        } else {
            f.note(path + "." + key, "drop_invalid_value", "uncoercible dimension removed");
        }
        loose.erase(it);
    }
    if (!dim)
        return;
    if (dim->unit == Dimension::Unit::Px) {
        if (dim->value < 0.0) {
            f.note(path + "." + key, "clamp_negative", number_text(dim->value) + " -> 0");
            dim->value = 0.0;
        }
    } else {
        if (dim->value > 100.0) {
            f.note(path + "." + key, "clamp_percent", number_text(dim->value) + "% -> 100%");
            dim->value = 100.0;
        } else if (dim->value <= 0.0) {
            f.note(path + "." + key, "drop_invalid_value", "nonpositive percent removed");
            dim.reset();
        }
    }
}

void fix_optional_color(std::optional<std::string>& color, LooseMap& loose, const std::string& key,
                        const std::string& path, Fixer& f)
{
    auto it = loose.find(key);
    if (it != loose.end()) {
        f.note(path + "." + key, "drop_invalid_value", "uncoercible color removed");
        loose.erase(it);
    }
    if (color && !is_hex_color(*color)) {
        f.note(path + "." + key, "drop_invalid_value", "malformed color \"" + *color + "\" removed");
        color.reset();
    }
}

void drop_unknown_loose(LooseMap& loose, const std::string& path, Fixer& f)
{
    for (const auto& [key, value] : loose)
        f.note(path + "." + key, "drop_unknown_key", "unknown key pruned");
    loose.clear();
}

void fix_prop(const PropSpec& spec, PropMap& props, const std::string& path, Fixer& f)
{
    auto it = props.find(spec.name);
    bool drop = false;
    if (it != props.end()) {
        Json& v = it->second;
        const std::string ppath = path + ".props." + spec.name;
        switch (spec.type) {
        case PropType::Number: {
            if (!json_is_number(v)) {
                if (auto num = numeric_string(v)) {
                    f.note(ppath, "coerce_numeric_string", v.dump() + " -> " + number_text(*num));
                    v = canonical_number(*num);
                } else {
                    drop = true;
                }
            }
            if (!drop && json_is_number(v)) {
                double d = v.get<double>();
                if (d < spec.min_value) {
                    f.note(ppath, "clamp_range", number_text(d) + " -> " + number_text(spec.min_value));
                    v = canonical_number(spec.min_value);
                } else if (d > spec.max_value) {
                    f.note(ppath, "clamp_range", number_text(d) + " -> " + number_text(spec.max_value));
                    v = canonical_number(spec.max_value);
                }
            }
            break;
        }
        case PropType::String: {
            if (!v.is_string()) {
                if (json_is_number(v)) {
                    f.note(ppath, "coerce_number_to_string", v.dump() + " -> string");
                    v = Json(number_text(v.get<double>()));
                } else {
                    drop = true;
                }
            }
            break;
        }
        case PropType::Color: {
            if (!v.is_string() || !is_hex_color(v.get_ref<const std::string&>()))
                drop = true;
            break;
        }
        case PropType::Bool: {
            if (!v.is_boolean())
                drop = true;
            break;
        }
        case PropType::NumberArray: {
            if (!v.is_array()) {
                drop = true;
                break;
            }
            for (auto& e : v) {
                if (json_is_number(e))
                    continue;
                if (auto num = numeric_string(e)) {
                    f.note(ppath, "coerce_numeric_string", e.dump() + " -> " + number_text(*num));
                    e = canonical_number(*num);
                } else {
                    drop = true;
                    break;
                }
            }
            if (!drop && spec.nonempty && v.empty())
                drop = true;
            break;
        }
        case PropType::Number2D: {
            if (!v.is_array() || v.empty()) {
                drop = !v.is_array() || spec.nonempty;
                break;
            }
            for (auto& row : v) {
                if (!row.is_array() || (spec.nonempty && row.empty())) {
                    drop = true;
                    break;
                }
                for (auto& e : row) {
                    if (json_is_number(e))
                        continue;
                    if (auto num = numeric_string(e)) {
                        f.note(ppath, "coerce_numeric_string", e.dump() + " -> " + number_text(*num));
                        e = canonical_number(*num);
                    } else {
                        drop = true;
                        break;
                    }
                }
                if (drop)
                    break;
            }
            break;
        }
        case PropType::StringArray:
        case PropType::ColorArray: {
            if (!v.is_array()) {
                drop = true;
                break;
            }
            for (auto& e : v) {
                if (!e.is_string()) {
                    drop = true;
                    break;
                }
                if (spec.type == PropType::ColorArray) {
                    std::string lower = lowercase_hex(e.get_ref<const std::string&>());
                    if (!is_hex_color(lower)) {
                        drop = true;
                        break;
                    }
                    e = Json(lower);
                }
            }
            break;
        }
        }
        if (drop) {
            f.note(path + ".props." + spec.name, "drop_invalid_value", "value outside the prop schema removed");
            props.erase(it);
        }
    }
    if (spec.required && props.find(spec.name) == props.end()) {
        props[spec.name] = spec.default_value;
        f.note(path + ".props." + spec.name, "default_required_prop",
               "filled with schema default " + spec.default_value.dump());
    }
}

void repair_node(Node& node, const std::string& path, Fixer& f);

void repair_container(ContainerNode& node, const std::string& path, Fixer& f)
{
    auto dit = node.loose.find("direction");
    if (dit != node.loose.end()) {
        node.loose.erase(dit);
        node.direction = Direction::Col;
        f.note(path + ".direction", "default_direction", "invalid direction replaced with \"col\"");
    } else if (!node.direction) {
        node.direction = Direction::Col;
        f.note(path + ".direction", "default_direction", "missing direction defaulted to \"col\"");
    }
    fix_loose_number(node.loose, "gap", node.gap, true, path, f);
    fix_loose_number(node.loose, "padding", node.padding, true, path, f);
    clamp_nonneg(node.gap, path + ".gap", f);
    clamp_nonneg(node.padding, path + ".padding", f);
    fix_flex(node.flex, node.loose, path, f);
    fix_dimension(node.width, node.loose, "width", path, f);
    fix_dimension(node.height, node.loose, "height", path, f);
    fix_optional_color(node.background_color, node.loose, "backgroundColor", path, f);
    {
        auto it = node.loose.find("borderRadius");
        if (it != node.loose.end()) {
            if (auto v = numeric_string(it->second)) {
                node.border_radius = *v;
                f.note(path + ".borderRadius", "coerce_numeric_string",
                       "\"" + it->second.get<std::string>() + "\" -> " + number_text(*v));
            } else {
                f.note(path + ".borderRadius", "drop_invalid_value", "uncoercible value removed");
            }
            node.loose.erase(it);
        }
        if (node.border_radius && *node.border_radius < 0.0) {
            f.note(path + ".borderRadius", "clamp_negative", number_text(*node.border_radius) + " -> 0");
            node.border_radius = 0.0;
        }
    }
    drop_unknown_loose(node.loose, path, f);
    for (size_t i = 0; i < node.children.size(); ++i)
        repair_node(node.children[i], path + ".children[" + std::to_string(i) + "]", f);
}

void repair_leaf(LeafNode& node, const std::string& path, Fixer& f)
{
    const KindSchema& schema = schema_for(node.component);
    fix_flex(node.flex, node.loose, path, f);
    fix_dimension(node.width, node.loose, "width", path, f);
    fix_dimension(node.height, node.loose, "height", path, f);

    auto cit = node.loose.find("content");
    if (cit != node.loose.end()) {
        if (schema.takes_content && json_is_number(cit->second)) {
            node.content = number_text(cit->second.get<double>());
            f.note(path + ".content", "coerce_number_to_string", "number rendered as text content");
        } else {
            f.note(path + ".content", "drop_invalid_value", "uncoercible content removed");
        }
        node.loose.erase(cit);
    }
    if (schema.takes_content) {
        if (!node.content) {
            node.content = "";
            f.note(path + ".content", "default_required_field", "missing content set to \"\"");
        }
    } else if (node.content) {
        node.content.reset();
        f.note(path + ".content", "drop_content", "content dropped on non-Text leaf");
    }

    // Unknown prop keys are pruned; known props are coerced/clamped/defaulted.
    for (auto it = node.props.begin(); it != node.props.end();) {
        if (!schema.find(it->first)) {
            f.note(path + ".props." + it->first, "drop_unknown_key", "unknown prop pruned");
            it = node.props.erase(it);
        } else {
            ++it;
        }
    }
    for (const auto& ps : schema.props)
        fix_prop(ps, node.props, path, f);

    if (node.component == ComponentKind::Button) {
        auto icon = node.props.find("icon");
        if (icon != node.props.end() && node.props.find("content") != node.props.end()) {
            node.props.erase(icon);
            f.note(path + ".props.icon", "drop_invalid_value", "Button carries icon or text, not both; icon dropped");
        }
    }
    drop_unknown_loose(node.loose, path, f);
}

void repair_node(Node& node, const std::string& path, Fixer& f)
{
    if (node.is_container())
        repair_container(node.container(), path, f);
    else
        repair_leaf(node.leaf(), path, f);
}

} // namespace

RepairResult repair(const WidgetSpec& spec)
{
    if (!spec.root)
        throw Error(ErrorCode::Unrepairable, "widget has no root container", "root");
    if (!spec.root->is_container())
        throw Error(ErrorCode::Unrepairable, "root must be a container node", "root");

    RepairResult result { spec, {} };
    WidgetSpec& s = result.spec;
    Fixer f { result.log.entries };

    {
        auto it = s.loose.find("backgroundColor");
        if (it != s.loose.end()) {
            s.background_color = "#ffffff";
            f.note("widget.backgroundColor", "default_required_field",
                   it->second.is_null() ? "missing backgroundColor set to #ffffff"
                                        : "uncoercible backgroundColor set to #ffffff");
            s.loose.erase(it);
        } else if (!is_hex_color(s.background_color)) {
            f.note("widget.backgroundColor", "default_required_field",
                   "malformed color \"" + s.background_color + "\" set to #ffffff");
            s.background_color = "#ffffff";
        }
    }
    fix_loose_number(s.loose, "borderRadius", s.border_radius, true, "widget", f);
    fix_loose_number(s.loose, "padding", s.padding, true, "widget", f);
    clamp_nonneg(s.border_radius, "widget.borderRadius", f);
    clamp_nonneg(s.padding, "widget.padding", f);
    {
        auto it = s.loose.find("aspectRatio");
        if (it != s.loose.end()) {
            if (auto v = numeric_string(it->second); v && *v > 0.0) {
                s.aspect_ratio = *v;
                f.note("widget.aspectRatio", "coerce_numeric_string",
                       "\"" + it->second.get<std::string>() + "\" -> " + number_text(*v));
            } else {
                s.aspect_ratio = 1.0;
                f.note("widget.aspectRatio", "default_required_field", "aspectRatio set to 1");
            }
            s.loose.erase(it);
        } else if (s.aspect_ratio <= 0.0) {
            s.aspect_ratio = 1.0;
            f.note("widget.aspectRatio", "default_required_field", "nonpositive aspectRatio set to 1");
        }
    }
    drop_unknown_loose(s.loose, "widget", f);

    repair_node(*s.root, "root", f);
    return result;
}

} // namespace wf::dsl
