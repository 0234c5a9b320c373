#include "widgetforge/dsl.hpp"

#include <algorithm>

namespace wf::dsl {

namespace {

Json dimension_to_json(const Dimension& d)
{
    if (d.unit == Dimension::Unit::Px)
        return canonical_number(d.value);
    Json n = canonical_number(d.value);
    return Json(n.dump() + "%");
}

Json lowercase_colors(const PropSpec& spec, const Json& v)
{
    if (spec.type == PropType::Color && v.is_string())
        return Json(lowercase_hex(v.get_ref<const std::string&>()));
    if (spec.type == PropType::ColorArray && v.is_array()) {
        Json out = Json::array();
        for (const auto& e : v)
            out.push_back(e.is_string() ? Json(lowercase_hex(e.get_ref<const std::string&>())) : e);
        return out;
    }
    return v;
}

OrderedJson container_to_json(const ContainerNode& node)
{
    OrderedJson j;
    j["type"] = "container";
    if (node.direction)
        j["direction"] = std::string(to_string(*node.direction));
    if (node.gap != 0.0)
        j["gap"] = canonical_number(node.gap);
    if (node.flex.weight != 0.0)
        j["flex"] = canonical_number(node.flex.weight);
    if (node.width)
        j["width"] = dimension_to_json(*node.width);
    if (node.height)
        j["height"] = dimension_to_json(*node.height);
    if (node.padding != 0.0)
        j["padding"] = canonical_number(node.padding);
    if (node.background_color)
        j["backgroundColor"] = lowercase_hex(*node.background_color);
    if (node.border_radius)
        j["borderRadius"] = canonical_number(*node.border_radius);
    OrderedJson children = OrderedJson::array();
    for (const auto& child : node.children)
        children.push_back(node_to_json(child));
    j["children"] = std::move(children);
    return j;
}

OrderedJson leaf_to_json(const LeafNode& node)
{
    OrderedJson j;
    j["type"] = "leaf";
    j["component"] = std::string(to_string(node.component));
    if (node.flex.weight != 0.0)
        j["flex"] = canonical_number(node.flex.weight);
    if (node.width)
        j["width"] = dimension_to_json(*node.width);
    if (node.height)
        j["height"] = dimension_to_json(*node.height);

    const KindSchema& schema = schema_for(node.component);
    OrderedJson props;
    for (const auto& ps : schema.props) {
        auto it = node.props.find(ps.name);
        if (it != node.props.end())
            props[ps.name] = lowercase_colors(ps, it->second);
    }
    // Unknown props only appear in unvalidated specs; keep them stable anyway.
    std::vector<const PropMap::value_type*> extra;
    for (const auto& kv : node.props) {
        if (!schema.find(kv.first))
            extra.push_back(&kv);
    }
    std::sort(extra.begin(), extra.end(),
              [](const auto* a, const auto* b) { return a->first < b->first; });
    for (const auto* kv : extra)
        props[kv->first] = kv->second;
    if (!props.empty())
        j["props"] = std::move(props);

    if (node.content)
        j["content"] = *node.content;
    return j;
}

} // namespace

OrderedJson node_to_json(const Node& node)
{
    if (node.is_container())
        return container_to_json(node.container());
    return leaf_to_json(node.leaf());
}

std::string serialize(const WidgetSpec& spec)
{
    OrderedJson widget;
    widget["backgroundColor"] = lowercase_hex(spec.background_color);
    widget["borderRadius"] = canonical_number(spec.border_radius);
    widget["padding"] = canonical_number(spec.padding);
    widget["aspectRatio"] = canonical_number(spec.aspect_ratio);
    if (spec.root)
        widget["root"] = node_to_json(*spec.root);

    OrderedJson doc;
    doc["widget"] = std::move(widget);
    return doc.dump(2) + "\n";
}

} // namespace wf::dsl
