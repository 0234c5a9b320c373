#include "widgetforge/synth.hpp"

#include "widgetforge/codegen.hpp"
#include "widgetforge/error.hpp"
#include "widgetforge/fit.hpp"
#include "widgetforge/io.hpp"
#include "widgetforge/layout.hpp"
#include "widgetforge/util.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <random>
#include <thread>

namespace wf::synth {

namespace fs = std::filesystem;
using dsl::Json;

std::string_view theme_name(Theme t)
{
    switch (t) {
    case Theme::Light: return "light";
    case Theme::Dark: return "dark";
    case Theme::Colorful: return "colorful";
    case Theme::Glassmorphism: return "glassmorphism";
    case Theme::Minimal: return "minimal";
    }
    return "light";
}

std::optional<Theme> theme_from_string(std::string_view name)
{
    for (Theme t : all_themes())
        if (theme_name(t) == name)
            return t;
    return std::nullopt;
}

const std::vector<Theme>& all_themes()
{
    static const std::vector<Theme> themes { Theme::Light, Theme::Dark, Theme::Colorful,
                                             Theme::Glassmorphism, Theme::Minimal };
    return themes;
}

namespace {

std::vector<std::string> color_list(const Json& arr, const std::string& at)
{
    if (!arr.is_array())
        throw Error(ErrorCode::SchemaError, "expected an array of hex colors", at);
    std::vector<std::string> out;
    for (size_t i = 0; i < arr.size(); ++i) {
        const Json& e = arr[i];
        if (!e.is_string() || !dsl::is_hex_color(e.get<std::string>()))
            throw Error(ErrorCode::SchemaError, "entries must be #rrggbb colors",
                        at + "[" + std::to_string(i) + "]");
        out.push_back(dsl::lowercase_hex(e.get<std::string>()));
    }
    return out;
}

const Json& required_field(const Json& j, const char* key)
{
    auto it = j.find(key);
    if (it == j.end())
        throw Error(ErrorCode::SchemaError, std::string("palette requires \"") + key + "\"");
    return *it;
}

} // namespace

ThemePalette ThemePalette::from_json(const Json& j)
{
    if (!j.is_object())
        throw Error(ErrorCode::SchemaError, "theme palette must be a JSON object");
    static const char* known[] = { "background", "surface",      "text",       "accents",
                                   "chartPalettes", "radiusDelta", "fontWeights" };
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool ok = false;
        for (const char* k : known)
            ok = ok || it.key() == k;
        if (!ok)
            throw Error(ErrorCode::SchemaError, "unknown palette key \"" + it.key() + "\"");
    }

    ThemePalette p;
    p.background = color_list(required_field(j, "background"), "background");
    p.surface = color_list(required_field(j, "surface"), "surface");
    p.text = color_list(required_field(j, "text"), "text");
    p.accents = color_list(required_field(j, "accents"), "accents");

    const Json& charts = required_field(j, "chartPalettes");
    if (!charts.is_array())
        throw Error(ErrorCode::SchemaError, "\"chartPalettes\" must be an array of color arrays");
    for (size_t i = 0; i < charts.size(); ++i) {
        auto colors = color_list(charts[i], "chartPalettes[" + std::to_string(i) + "]");
        if (colors.empty())
            throw Error(ErrorCode::SchemaError, "chart palettes must be non-empty",
                        "chartPalettes[" + std::to_string(i) + "]");
        p.chart_palettes.push_back(std::move(colors));
    }

    const Json& delta = required_field(j, "radiusDelta");
    if (!delta.is_array() || delta.size() != 2 || !delta[0].is_number() || !delta[1].is_number())
        throw Error(ErrorCode::SchemaError, "\"radiusDelta\" must be [lo, hi]");
    p.radius_lo = static_cast<int>(std::llround(delta[0].get<double>()));
    p.radius_hi = static_cast<int>(std::llround(delta[1].get<double>()));
    if (p.radius_hi < p.radius_lo)
        throw Error(ErrorCode::SchemaError, "\"radiusDelta\" bounds are reversed");

    const Json& weights = required_field(j, "fontWeights");
    if (!weights.is_array())
        throw Error(ErrorCode::SchemaError, "\"fontWeights\" must be an array");
    for (size_t i = 0; i < weights.size(); ++i) {
        if (!weights[i].is_number_integer())
            throw Error(ErrorCode::SchemaError, "font weights must be integers",
                        "fontWeights[" + std::to_string(i) + "]");
        int w = weights[i].get<int>();
        if (w < 100 || w > 900)
            throw Error(ErrorCode::SchemaError, "font weights must be within [100, 900]",
                        "fontWeights[" + std::to_string(i) + "]");
        p.font_weights.push_back(w);
    }
    return p;
}

ThemeLibrary ThemeLibrary::load(const std::string& dir)
{
    ThemeLibrary lib;
    for (Theme t : all_themes()) {
        std::string path = (fs::path(dir) / (std::string(theme_name(t)) + ".json")).string();
        Json j = Json::parse(io::read_file(path), nullptr, false);
        if (j.is_discarded())
            throw Error(ErrorCode::SyntaxError, "invalid JSON", path);
        try {
            lib.palettes_[static_cast<size_t>(t)] = ThemePalette::from_json(j);
        } catch (const Error& e) {
            throw Error(e.code(), std::string(e.what()), path);
        }
    }
    return lib;
}

const ThemePalette& ThemeLibrary::palette(Theme t) const
{
    return palettes_[static_cast<size_t>(t)];
}

ThemePalette& ThemeLibrary::palette(Theme t)
{
    return palettes_[static_cast<size_t>(t)];
}

namespace {

bool styled_prop(const dsl::KindSchema& schema, const std::string& name)
{
    if (name == "fontWeight" || name == "borderRadius")
        return true;
    const dsl::PropSpec* ps = schema.find(name);
    return ps
        && (ps->type == dsl::PropType::Color || ps->type == dsl::PropType::ColorArray);
}

void strip_node(dsl::Node& node)
{
    if (node.is_container()) {
        auto& c = node.container();
        c.background_color.reset();
        c.border_radius.reset();
        for (auto& child : c.children)
            strip_node(child);
        return;
    }
    auto& leaf = node.leaf();
    const auto& schema = dsl::schema_for(leaf.component);
    for (auto it = leaf.props.begin(); it != leaf.props.end();) {
        if (styled_prop(schema, it->first))
            it = leaf.props.erase(it);
        else
            ++it;
    }
}

} // namespace

std::uint64_t structure_hash(const dsl::WidgetSpec& spec)
{
    dsl::WidgetSpec copy = spec;
    copy.background_color = "#ffffff";
    copy.border_radius = 0.0;
    if (copy.root)
        strip_node(*copy.root);
    return fnv1a64(dsl::serialize(copy));
}

std::uint64_t pair_seed(std::uint64_t seed, std::string_view spec_id, Theme theme)
{
    char bytes[8];
    for (int i = 0; i < 8; ++i)
        bytes[i] = static_cast<char>((seed >> (8 * i)) & 0xff);
    std::uint64_t h = fnv1a64(std::string_view(bytes, 8));
    h = fnv1a64(std::string_view("\0", 1), h);
    h = fnv1a64(spec_id, h);
    h = fnv1a64(std::string_view("\0", 1), h);
    h = fnv1a64(theme_name(theme), h);
    return h;
}

namespace {

// Draw order is fixed (shell first, then pre-order), so outputs depend only on
// (spec, palette, seed). Empty palette lists skip without consuming a draw.
struct Mutator {
    const ThemePalette& pal;
    std::mt19937_64 rng;

    template <typename T> const T* pick(const std::vector<T>& v)
    {
        if (v.empty())
            return nullptr;
        return &v[static_cast<size_t>(rng() % v.size())];
    }

    double radius_delta()
    {
        auto span = static_cast<std::uint64_t>(pal.radius_hi - pal.radius_lo) + 1;
        return pal.radius_lo + static_cast<double>(rng() % span);
    }

    void mutate_leaf(dsl::LeafNode& leaf)
    {
        const auto& schema = dsl::schema_for(leaf.component);
        for (auto& [name, value] : leaf.props) {
            if (name == "fontWeight") {
                if (const int* w = pick(pal.font_weights))
                    value = *w;
                continue;
            }
            if (name == "borderRadius") {
                if (dsl::json_is_number(value))
                    value = dsl::canonical_number(
                        std::max(0.0, value.get<double>() + radius_delta()));
                continue;
            }
            const dsl::PropSpec* ps = schema.find(name);
            if (!ps)
                continue;
            if (ps->type == dsl::PropType::Color) {
                const auto& set = (leaf.component == dsl::ComponentKind::Text && name == "color")
                    ? pal.text
                    : pal.accents;
                if (const std::string* c = pick(set))
                    value = *c;
            } else if (ps->type == dsl::PropType::ColorArray && value.is_array()
                       && !value.empty()) {
                if (const auto* colors = pick(pal.chart_palettes)) {
                    Json cycled = Json::array();
                    for (size_t i = 0; i < value.size(); ++i)
                        cycled.push_back((*colors)[i % colors->size()]);
                    value = cycled;
                }
            }
        }
    }

    void walk(dsl::Node& node)
    {
        if (node.is_leaf()) {
            mutate_leaf(node.leaf());
            return;
        }
        auto& c = node.container();
        if (c.background_color)
            if (const std::string* s = pick(pal.surface))
                c.background_color = *s;
        if (c.border_radius)
            c.border_radius = std::max(0.0, *c.border_radius + radius_delta());
        for (auto& child : c.children)
            walk(child);
    }
};

} // namespace

dsl::WidgetSpec mutate(const dsl::WidgetSpec& spec, const ThemePalette& palette,
                       std::uint64_t seed)
{
    dsl::WidgetSpec out = spec;
    Mutator m { palette, std::mt19937_64(seed) };
    if (const std::string* bg = m.pick(palette.background))
        out.background_color = *bg;
    if (out.border_radius > 0.0)
        out.border_radius = std::max(0.0, out.border_radius + m.radius_delta());
    if (out.root)
        m.walk(*out.root);
    return out;
}

int BatchResult::failures() const
{
    int n = 0;
    for (const auto& item : items)
        n += item.ok ? 0 : 1;
    return n;
}

Json BatchResult::manifest_json(std::uint64_t seed) const
{
    Json arr = Json::array();
    for (const auto& item : items) {
        Json e;
        e["id"] = item.spec_id;
        e["theme"] = std::string(theme_name(item.theme));
        e["ok"] = item.ok;
        if (item.ok) {
            char buf[24];
            std::snprintf(buf, sizeof buf, "%016llx",
                          static_cast<unsigned long long>(item.structure));
            e["width"] = item.width;
            e["height"] = item.height;
            e["structureHash"] = buf;
        } else {
            e["error"] = item.error;
        }
        arr.push_back(std::move(e));
    }
    Json j;
    j["seed"] = seed;
    j["failures"] = failures();
    j["items"] = std::move(arr);
    return j;
}

BatchResult batch_generate(const std::vector<std::pair<std::string, dsl::WidgetSpec>>& specs,
                           const std::vector<Theme>& themes, std::uint64_t seed,
                           const ThemeLibrary& lib, const std::string& out_dir,
                           const std::string& icon_dir, int jobs)
{
    BatchResult result;
    size_t total = specs.size() * themes.size();
    result.items.resize(total);
    if (themes.empty())
        throw Error(ErrorCode::BadParameter, "at least one theme is required");

    auto process = [&](size_t index) {
        const auto& [id, spec] = specs[index / themes.size()];
        Theme theme = themes[index % themes.size()];
        BundleStatus st;
        st.spec_id = id;
        st.theme = theme;
        try {
            std::uint64_t s = pair_seed(seed, id, theme);
            dsl::WidgetSpec mutated = mutate(spec, lib.palette(theme), s);
            auto report = dsl::validate(mutated);
            if (report.has_errors())
                throw Error(ErrorCode::SchemaError,
                            "mutated spec failed validation: " + report.to_json().dump());
            st.structure = structure_hash(mutated);

            auto fit = fit::fit_width(mutated, mutated.aspect_ratio);
            auto tree = layout::solve_layout(mutated, fit.w_star, fit.h_star);
            auto layout_report = layout::layout_report(tree);

            codegen::EmitOptions opts;
            opts.layout_w = fit.w_star;
            opts.layout_h = fit.h_star;
            opts.icon_dir = icon_dir;
            opts.target = codegen::EmitTarget::Html;
            auto html = codegen::emit(mutated, opts);
            opts.target = codegen::EmitTarget::React;
            auto jsx = codegen::emit(mutated, opts);

            fs::path dir = fs::path(out_dir) / id / std::string(theme_name(theme));
            io::atomic_write_file((dir / "widget.json").string(), dsl::serialize(mutated));
            io::atomic_write_file((dir / "widget.html").string(), html.source);
            io::atomic_write_file((dir / "widget.jsx").string(), jsx.source);
            Json layout_json = layout::layout_to_json(tree, layout_report,
                                                      layout::violation(layout_report));
            io::atomic_write_file((dir / "layout.json").string(), layout_json.dump(2) + "\n");

            st.width = fit.w_star;
            st.height = fit.h_star;
            st.ok = true;
        } catch (const Error& e) {
            st.error = std::string(error_code_name(e.code())) + ": " + e.what();
        } catch (const std::exception& e) {
            st.error = e.what();
        }
        result.items[index] = std::move(st);
    };

    size_t workers = static_cast<size_t>(std::max(1, jobs));
    workers = std::min(workers, std::max<size_t>(total, 1));
    if (workers <= 1) {
        for (size_t i = 0; i < total; ++i)
            process(i);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (size_t t = 0; t < workers; ++t)
            pool.emplace_back([&, t] {
                for (size_t i = t; i < total; i += workers)
                    process(i);
            });
        for (auto& th : pool)
            th.join();
    }

    Json manifest = result.manifest_json(seed);
    io::atomic_write_file((fs::path(out_dir) / "manifest.json").string(), manifest.dump(2) + "\n");
    return result;
}

} // namespace wf::synth
