#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wf::svg {

// Minimal element tree for generated vector markup. Attributes are stored
// with kebab-case names and rewritten per output dialect at render time.
struct SvgNode {
    std::string tag;
    std::vector<std::pair<std::string, std::string>> attrs;
    std::vector<SvgNode> children;
    std::string text;

    explicit SvgNode(std::string t = "svg")
        : tag(std::move(t))
    {
    }

    SvgNode& attr(std::string key, std::string value)
    {
        attrs.emplace_back(std::move(key), std::move(value));
        return *this;
    }

    SvgNode& child(SvgNode n)
    {
        children.push_back(std::move(n));
        return *this;
    }
};

enum class Dialect { Html, Jsx };

std::string camel_case(std::string_view kebab);
std::string escape_text(std::string_view raw);
std::string escape_attr(std::string_view raw);
std::string jsx_string(std::string_view raw);

// Renders the node indented by `indent` two-space levels, without a trailing
// newline on the outermost line.
std::string render_svg(const SvgNode& node, Dialect dialect, int indent = 0);

} // namespace wf::svg
