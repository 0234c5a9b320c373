#include "widgetforge/svg.hpp"

#include <cctype>

namespace wf::svg {

std::string camel_case(std::string_view kebab)
{
    if (kebab.rfind("data-", 0) == 0)
        return std::string(kebab);
    std::string out;
    out.reserve(kebab.size());
    bool upper = false;
    for (char c : kebab) {
        if (c == '-') {
            upper = true;
        } else {
            out.push_back(upper ? static_cast<char>(std::toupper(static_cast<unsigned char>(c))) : c);
            upper = false;
        }
    }
    return out;
}

std::string escape_text(std::string_view raw)
{
    std::string out;
    out.reserve(raw.size());
    for (char c : raw) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        default: out.push_back(c);
        }
    }
    return out;
}

std::string escape_attr(std::string_view raw)
{
    std::string out;
    out.reserve(raw.size());
    for (char c : raw) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out.push_back(c);
        }
    }
    return out;
}

std::string jsx_string(std::string_view raw)
{
    std::string out = "\"";
    for (char c : raw) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        case '\r': out += "\\r"; break;
        default: out.push_back(c);
        }
    }
    out += "\"";
    return out;
}

namespace {

void render_node(const SvgNode& node, Dialect dialect, int indent, std::string& out)
{
    std::string pad(static_cast<size_t>(indent) * 2, ' ');
    out += pad;
    out += "<";
    out += node.tag;
    for (const auto& [key, value] : node.attrs) {
        out += " ";
        out += dialect == Dialect::Jsx ? camel_case(key) : std::string(key);
        out += "=\"";
        out += escape_attr(value);
        out += "\"";
    }
    if (node.children.empty() && node.text.empty()) {
        out += "/>";
        return;
    }
    out += ">";
    if (node.children.empty()) {
        out += dialect == Dialect::Jsx ? "{" + jsx_string(node.text) + "}" : escape_text(node.text);
        out += "</" + node.tag + ">";
        return;
    }
    for (const auto& child : node.children) {
        out += "\n";
        render_node(child, dialect, indent + 1, out);
    }
    if (!node.text.empty()) {
        out += "\n" + pad + "  ";
        out += dialect == Dialect::Jsx ? "{" + jsx_string(node.text) + "}" : escape_text(node.text);
    }
    out += "\n" + pad + "</" + node.tag + ">";
}

} // namespace

std::string render_svg(const SvgNode& node, Dialect dialect, int indent)
{
    std::string out;
    render_node(node, dialect, indent, out);
    return out;
}

} // namespace wf::svg
