#include "widgetforge/templates.hpp"

#include <fstream>
#include <sstream>

namespace wf::dsl {

namespace {

PropType prop_type_from_string(const std::string& s, const std::string& where)
{
    if (s == "number")
        return PropType::Number;
    if (s == "string")
        return PropType::String;
    if (s == "color")
        return PropType::Color;
    if (s == "bool")
        return PropType::Bool;
    if (s == "number_array")
        return PropType::NumberArray;
    if (s == "number_2d")
        return PropType::Number2D;
    if (s == "string_array")
        return PropType::StringArray;
    if (s == "color_array")
        return PropType::ColorArray;
    throw Error(ErrorCode::SchemaError, "unknown slot type \"" + s + "\"", where);
}

std::string slurp(const std::filesystem::path& p)
{
    std::ifstream in(p, std::ios::binary);
    if (!in)
        throw Error(ErrorCode::IoError, "cannot open " + p.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Returns an error description, or empty when the value fits the slot.
std::string check_slot_value(const TemplateSlot& slot, const Json& v)
{
    switch (slot.type) {
    case PropType::Number:
        if (!json_is_number(v))
            return "expected a number";
        if (v.get<double>() < slot.min_value || v.get<double>() > slot.max_value)
            return "number outside the allowed range";
        return {};
    case PropType::String:
        return v.is_string() ? "" : "expected a string";
    case PropType::Color:
        if (!v.is_string() || !is_hex_color(lowercase_hex(v.get_ref<const std::string&>())))
            return "expected #rgb or #rrggbb";
        return {};
    case PropType::Bool:
        return v.is_boolean() ? "" : "expected a boolean";
    case PropType::NumberArray: {
        if (!v.is_array())
            return "expected an array of numbers";
        if (slot.nonempty && v.empty())
            return "array must not be empty";
        for (const auto& e : v)
            if (!json_is_number(e))
                return "expected a number";
        return {};
    }
    case PropType::Number2D: {
        if (!v.is_array())
            return "expected an array of number arrays";
        if (slot.nonempty && v.empty())
            return "array must not be empty";
        for (const auto& row : v) {
            if (!row.is_array())
                return "expected an array of numbers";
            if (slot.nonempty && row.empty())
                return "array must not be empty";
            for (const auto& e : row)
                if (!json_is_number(e))
                    return "expected a number";
        }
        return {};
    }
    case PropType::StringArray:
    case PropType::ColorArray: {
        if (!v.is_array())
            return "expected an array of strings";
        for (const auto& e : v) {
            if (!e.is_string())
                return "expected a string";
            if (slot.type == PropType::ColorArray
                && !is_hex_color(lowercase_hex(e.get_ref<const std::string&>())))
                return "expected #rgb or #rrggbb";
        }
        return {};
    }
    }
    return "unsupported slot type";
}

Json normalize_slot_value(const TemplateSlot& slot, Json v)
{
    if (slot.type == PropType::Color && v.is_string())
        return Json(lowercase_hex(v.get_ref<const std::string&>()));
    if (slot.type == PropType::ColorArray && v.is_array()) {
        for (auto& e : v)
            if (e.is_string())
                e = Json(lowercase_hex(e.get_ref<const std::string&>()));
    }
    return v;
}

void set_at_path(Json& fragment, const std::string& target, Json value, const std::string& where)
{
    Json* cur = &fragment;
    size_t pos = 0;
    while (true) {
        size_t dot = target.find('.', pos);
        std::string seg = target.substr(pos, dot == std::string::npos ? std::string::npos : dot - pos);
        if (seg.empty())
            throw Error(ErrorCode::SchemaError, "empty segment in slot target \"" + target + "\"", where);
        if (!cur->is_object() && !cur->is_null())
            throw Error(ErrorCode::SchemaError, "slot target \"" + target + "\" does not address an object", where);
        if (dot == std::string::npos) {
            (*cur)[seg] = std::move(value);
            return;
        }
        cur = &(*cur)[seg];
        pos = dot + 1;
    }
}

} // namespace

const TemplateSlot* WidgetTemplate::find_slot(std::string_view name) const
{
    for (const auto& s : slots) {
        if (s.name == name)
            return &s;
    }
    return nullptr;
}

TemplateLibrary TemplateLibrary::load(const std::filesystem::path& dir)
{
    TemplateLibrary lib;
    for (ComponentKind kind : all_component_kinds()) {
        std::filesystem::path base = dir / std::string(to_string(kind));
        std::filesystem::path frag_path = base / "template.widget.json";
        std::filesystem::path params_path = base / "params.json";
        if (!std::filesystem::exists(frag_path))
            continue;

        WidgetTemplate tpl;
        tpl.kind = kind;
        try {
            tpl.fragment = Json::parse(slurp(frag_path));
        } catch (const Json::parse_error&) {
            throw Error(ErrorCode::SyntaxError, "malformed template fragment", frag_path.string());
        }

        if (std::filesystem::exists(params_path)) {
            Json manifest;
            try {
                manifest = Json::parse(slurp(params_path));
            } catch (const Json::parse_error&) {
                throw Error(ErrorCode::SyntaxError, "malformed params manifest", params_path.string());
            }
            if (!manifest.is_object() || !manifest.contains("slots") || !manifest["slots"].is_object())
                throw Error(ErrorCode::SchemaError, "params manifest requires a \"slots\" object",
                            params_path.string());
            for (auto it = manifest["slots"].begin(); it != manifest["slots"].end(); ++it) {
                const Json& s = it.value();
                if (!s.is_object() || !s.contains("path") || !s["path"].is_string()
                    || !s.contains("type") || !s["type"].is_string())
                    throw Error(ErrorCode::SchemaError,
                                "slot \"" + it.key() + "\" requires string \"path\" and \"type\"",
                                params_path.string());
                TemplateSlot slot;
                slot.name = it.key();
                slot.target = s["path"].get<std::string>();
                slot.type = prop_type_from_string(s["type"].get<std::string>(), params_path.string());
                if (s.contains("min_items"))
                    slot.nonempty = s["min_items"].get<int>() > 0;
                if (s.contains("min"))
                    slot.min_value = s["min"].get<double>();
                if (s.contains("max"))
                    slot.max_value = s["max"].get<double>();
                tpl.slots.push_back(std::move(slot));
            }
        }
        lib.templates_.emplace(kind, std::move(tpl));
    }
    return lib;
}

const WidgetTemplate* TemplateLibrary::find(ComponentKind kind) const
{
    auto it = templates_.find(kind);
    return it == templates_.end() ? nullptr : &it->second;
}

Node TemplateLibrary::instantiate(ComponentKind kind, const std::map<std::string, Json>& params) const
{
    const WidgetTemplate* tpl = find(kind);
    if (!tpl)
        throw Error(ErrorCode::UnknownTemplate,
                    "no template for component \"" + std::string(to_string(kind)) + "\"");

    Json fragment = tpl->fragment;
    const std::string where = "template:" + std::string(to_string(kind));
    for (const auto& [name, value] : params) {
        const TemplateSlot* slot = tpl->find_slot(name);
        if (!slot)
            throw Error(ErrorCode::BadParameter, "unknown slot \"" + name + "\"", where);
        std::string err = check_slot_value(*slot, value);
        if (!err.empty())
            throw Error(ErrorCode::BadParameter, "slot \"" + name + "\": " + err, where);
        set_at_path(fragment, slot->target, normalize_slot_value(*slot, value), where);
    }
    return parse_node(fragment, where);
}

} // namespace wf::dsl
