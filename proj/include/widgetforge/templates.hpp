#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "widgetforge/dsl.hpp"

namespace wf::dsl {

struct TemplateSlot {
    std::string name;
    std::string target; // dotted path into the fragment, e.g. "props.data"
    PropType type { PropType::Number };
    bool nonempty { false };
    double min_value { -1.0e308 };
    double max_value { 1.0e308 };
};

struct WidgetTemplate {
    ComponentKind kind { ComponentKind::Text };
    Json fragment; // node JSON; slot defaults are the values already present
    std::vector<TemplateSlot> slots;

    const TemplateSlot* find_slot(std::string_view name) const;
};

class TemplateLibrary {
public:
    static TemplateLibrary load(const std::filesystem::path& dir);

    const WidgetTemplate* find(ComponentKind kind) const;
    size_t size() const { return templates_.size(); }

    // Substitutes params into declared slots and parses the result.
    // Throws Error{UnknownTemplate} for kinds outside the library and
    // Error{BadParameter} for unknown slots or out-of-domain values.
    Node instantiate(ComponentKind kind, const std::map<std::string, Json>& params = {}) const;

private:
    std::map<ComponentKind, WidgetTemplate> templates_;
};

} // namespace wf::dsl
