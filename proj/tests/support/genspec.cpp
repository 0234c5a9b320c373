#include "genspec.hpp"

#include <random>

namespace wf::test {

namespace {

using dsl::ComponentKind;
using dsl::Json;
using dsl::PropType;

struct Gen {
    std::mt19937_64 rng;
    int leaf_serial = 0;

    std::uint64_t next(std::uint64_t n) { return rng() % n; }
    int irange(int lo, int hi) { return lo + static_cast<int>(next(static_cast<std::uint64_t>(hi - lo + 1))); }
    bool chance(int pct) { return irange(1, 100) <= pct; }

    std::string hex_color()
    {
        static const char digits[] = "0123456789abcdef";
        std::string s = "#";
        for (int i = 0; i < 6; ++i)
            s += digits[next(16)];
        return s;
    }

    std::string word()
    {
        static const char* words[]
            = { "Today", "Steps", "Rain", "Sales", "Alpha", "Focus", "Queue", "Miles",
                "Tempo", "Drive", "North", "Inbox", "Score", "Pulse", "Cloud", "Delta" };
        return words[next(std::size(words))];
    }

    std::string icon_name()
    {
        static const char* names[] = { "sf:SfCircle", "sf:SfHeart", "sf:SfBolt", "sf:SfStar",
                                       "sf:SfPlay", "sf:SfSun", "sf:SfFlame" };
        return names[next(std::size(names))];
    }

    Json number_array(int lo_len, int hi_len, int lo, int hi)
    {
        Json arr = Json::array();
        int n = irange(lo_len, hi_len);
        for (int i = 0; i < n; ++i)
            arr.push_back(irange(lo, hi));
        return arr;
    }

    Json prop_value(ComponentKind kind, const dsl::PropSpec& ps)
    {
        switch (ps.type) {
        case PropType::Number:
            if (ps.name == "fontWeight")
                return irange(1, 9) * 100;
            if (ps.name == "value")
                return Json(irange(0, 100) / 100.0);
            if (ps.name == "fontSize")
                return irange(10, 28);
            if (ps.name == "size")
                return irange(12, 64);
            if (ps.name == "borderRadius")
                return irange(0, 20);
            if (ps.name == "padding")
                return irange(0, 12);
            if (ps.name == "thickness")
                return Json(irange(1, 6) * 0.5);
            if (ps.name == "max")
                return irange(100, 200);
            return irange(1, 50);
        case PropType::String:
            if (ps.name == "icon" || (kind == ComponentKind::Icon && ps.name == "name"))
                return icon_name();
            if (ps.name == "src")
                return word() + ".png";
            return word();
        case PropType::Color:
            return hex_color();
        case PropType::Bool:
            return next(2) == 1;
        case PropType::NumberArray:
            return number_array(1, 8, 0, 100);
        case PropType::Number2D: {
            Json rows = Json::array();
            int r = irange(1, 3);
            int cols = irange(1, 4);
            for (int i = 0; i < r; ++i)
                rows.push_back(number_array(cols, cols, 0, 20));
            return rows;
        }
        case PropType::StringArray: {
            Json arr = Json::array();
            int n = irange(1, 4);
            for (int i = 0; i < n; ++i)
                arr.push_back(word());
            return arr;
        }
        case PropType::ColorArray: {
            Json arr = Json::array();
            int n = irange(1, 4);
            for (int i = 0; i < n; ++i)
                arr.push_back(hex_color());
            return arr;
        }
        }
        return Json();
    }

    Json leaf(int depth)
    {
        const auto& kinds = dsl::all_component_kinds();
        // Serial cycling guarantees kind coverage across a handful of leaves.
        ComponentKind kind = kinds[(leaf_serial++ + static_cast<int>(next(3))) % kinds.size()];
        const auto& schema = dsl::schema_for(kind);

        Json node;
        node["type"] = "leaf";
        node["component"] = std::string(dsl::to_string(kind));

        Json props = Json::object();
        bool button_icon = kind == ComponentKind::Button && chance(40);
        for (const auto& ps : schema.props) {
            if (kind == ComponentKind::Button && ps.name == "icon" && !button_icon)
                continue;
            if (kind == ComponentKind::Button && ps.name == "content" && button_icon)
                continue;
            if (!ps.required && !chance(70))
                continue;
            props[ps.name] = prop_value(kind, ps);
        }
        if (kind == ComponentKind::Button && !button_icon)
            props["content"] = word();
        if (!props.empty())
            node["props"] = props;
        if (schema.takes_content)
            node["content"] = word() + " " + word();

        if (chance(30))
            node["width"] = chance(25) ? Json(std::to_string(irange(10, 80)) + "%")
                                       : Json(irange(20, 120));
        if (chance(25))
            node["height"] = irange(16, 80);
        if (chance(35))
            node["flex"] = irange(1, 3);
        (void)depth;
        return node;
    }

    Json container(int depth)
    {
        Json node;
        node["type"] = "container";
        node["direction"] = next(2) ? "row" : "col";
        if (chance(60))
            node["gap"] = irange(2, 12);
        if (chance(40))
            node["padding"] = irange(2, 10);
        if (chance(50))
            node["backgroundColor"] = hex_color();
        if (chance(40))
            node["borderRadius"] = irange(0, 16);
        if (chance(30))
            node["flex"] = irange(1, 3);

        Json children = Json::array();
        int n = irange(2, 4);
        for (int i = 0; i < n; ++i) {
            bool nest = depth < 2 && chance(35);
            children.push_back(nest ? container(depth + 1) : leaf(depth + 1));
        }
        node["children"] = children;
        return node;
    }
};

} // namespace

std::string random_spec_json(std::uint64_t seed)
{
    Gen g { std::mt19937_64(seed), 0 };
    static const double aspects[] = { 1.0, 1.3, 1.6, 2.17 };

    Json widget;
    widget["backgroundColor"] = g.hex_color();
    widget["borderRadius"] = g.irange(0, 24);
    widget["padding"] = g.irange(4, 16);
    widget["aspectRatio"] = aspects[g.next(std::size(aspects))];
    widget["root"] = g.container(0);

    Json doc;
    doc["widget"] = widget;
    return doc.dump(2);
}

dsl::WidgetSpec random_spec(std::uint64_t seed)
{
    return dsl::parse_widget_dsl(random_spec_json(seed));
}

} // namespace wf::test
