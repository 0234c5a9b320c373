#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "widgetforge/codegen.hpp"
#include "widgetforge/dsl.hpp"
#include "widgetforge/error.hpp"
#include "widgetforge/fit.hpp"
#include "widgetforge/icons.hpp"
#include "widgetforge/image.hpp"
#include "widgetforge/io.hpp"
#include "widgetforge/layout.hpp"
#include "widgetforge/metrics.hpp"
#include "widgetforge/palette.hpp"
#include "widgetforge/synth.hpp"

#ifndef WF_DEFAULT_DATA_DIR
#define WF_DEFAULT_DATA_DIR "data"
#endif

namespace fs = std::filesystem;
using wf::Error;
using wf::ErrorCode;
using wf::dsl::Json;

namespace {

struct GlobalOpts {
    bool json_errors = false;
    bool pretty = false;
};

void print_error(const Error& e, bool json_errors)
{
    if (json_errors) {
        Json j;
        j["error"] = { { "code", wf::error_code_name(e.code()) },
                       { "message", e.what() },
                       { "path", e.path() } };
        std::cerr << j.dump() << "\n";
        return;
    }
    std::cerr << "error: " << wf::error_code_name(e.code()) << ": " << e.what();
    if (!e.path().empty())
        std::cerr << " (" << e.path() << ")";
    std::cerr << "\n";
}

// stdout when the path is empty or "-", atomic file write otherwise.
void write_output(const std::string& path, const std::string& content)
{
    if (path.empty() || path == "-")
        std::cout << content;
    else
        wf::io::atomic_write_file(path, content);
}

Json parse_json_file(const std::string& path)
{
    Json j = Json::parse(wf::io::read_file(path), nullptr, false);
    if (j.is_discarded())
        throw Error(ErrorCode::SyntaxError, "invalid JSON", path);
    return j;
}

wf::dsl::WidgetSpec load_spec(const std::string& path)
{
    return wf::dsl::parse_widget_dsl(wf::io::read_file(path));
}

wf::metrics::MetricConfig resolve_metric_config(const std::string& explicit_path)
{
    std::string path = explicit_path;
    if (path.empty()) {
        const char* env = std::getenv("WIDGETFORGE_CONFIG");
        if (env && *env)
            path = env;
    }
    if (path.empty())
        return {};
    return wf::metrics::MetricConfig::from_json(parse_json_file(path));
}

std::optional<wf::metrics::OcrSidecar> load_sidecar(const std::string& path)
{
    if (path.empty())
        return std::nullopt;
    return wf::metrics::OcrSidecar::from_json(parse_json_file(path));
}

std::pair<double, double> parse_size(const std::string& s)
{
    double w = 0.0;
    double h = 0.0;
    char tail = 0;
    if (std::sscanf(s.c_str(), "%lfx%lf%c", &w, &h, &tail) != 2 || w <= 0.0 || h <= 0.0)
        throw Error(ErrorCode::BadParameter, "--size expects WxH with positive numbers");
    return { w, h };
}

std::string pretty_report(const wf::metrics::MetricReport& report)
{
    std::string out;
    char buf[128];
    for (const auto& [name, value] : report.metrics) {
        if (value.available)
            std::snprintf(buf, sizeof buf, "%-10s %10.4f\n", name.c_str(), value.score);
        else
            std::snprintf(buf, sizeof buf, "%-10s %10s  %s\n", name.c_str(), "n/a",
                          value.reason.c_str());
        out += buf;
    }
    return out;
}

// --- subcommand bodies -------------------------------------------------------

int run_validate(const std::string& input, bool do_repair, const std::string& out_path,
                 const GlobalOpts& g)
{
    wf::dsl::WidgetSpec spec = load_spec(input);
    wf::dsl::ValidationReport report = wf::dsl::validate(spec);

    Json j;
    j["valid"] = !report.has_errors();
    j["findings"] = report.to_json();
    bool ok = !report.has_errors();

    if (do_repair) {
        wf::dsl::RepairResult repaired = wf::dsl::repair(spec);
        wf::dsl::ValidationReport after = wf::dsl::validate(repaired.spec);
        j["repairs"] = repaired.log.to_json();
        j["valid"] = !after.has_errors();
        ok = !after.has_errors();
        if (!out_path.empty())
            write_output(out_path, wf::dsl::serialize(repaired.spec));
    }

    std::cout << j.dump(2) << "\n";
    (void)g;
    return ok ? 0 : 1;
}

int run_compile(const std::string& input, const std::string& target, const std::string& out_path,
                const std::string& manifest_path, bool do_fit, const std::string& size,
                const std::string& icon_dir, const GlobalOpts& g)
{
    wf::dsl::WidgetSpec spec = load_spec(input);
    wf::dsl::ValidationReport report = wf::dsl::validate(spec);
    if (report.has_errors()) {
        if (g.json_errors)
            std::cerr << Json({ { "findings", report.to_json() } }).dump() << "\n";
        else
            for (const auto& f : report.findings)
                std::cerr << f.path << ": " << f.message << "\n";
        return 1;
    }

    wf::codegen::EmitOptions opts;
    opts.target = target == "react" ? wf::codegen::EmitTarget::React : wf::codegen::EmitTarget::Html;
    opts.icon_dir = icon_dir;
    if (do_fit) {
        wf::fit::FitResult fit = wf::fit::fit_width(spec, spec.aspect_ratio);
        opts.layout_w = fit.w_star;
        opts.layout_h = fit.h_star;
    }
    if (!size.empty()) {
        auto [w, h] = parse_size(size);
        opts.frame_w = w;
        opts.frame_h = h;
        if (!do_fit) {
            opts.layout_w = w;
            opts.layout_h = h;
        }
    }

    wf::codegen::EmitResult emitted = wf::codegen::emit(spec, opts);
    for (const auto& w : emitted.warnings)
        std::cerr << "warning: " << w << "\n";
    write_output(out_path, emitted.source + (out_path.empty() ? "\n" : ""));
    if (!manifest_path.empty())
        write_output(manifest_path,
                     wf::codegen::manifest_to_json(emitted.manifest).dump(2) + "\n");
    return 0;
}

int run_fit(const std::string& input, double aspect, double width, int cap, bool trace)
{
    wf::dsl::WidgetSpec spec = load_spec(input);
    double a = aspect > 0.0 ? aspect : spec.aspect_ratio;
    wf::fit::FitResult fit = wf::fit::fit_width(spec, a, width, cap);

    Json j;
    j["width"] = fit.w_star;
    j["height"] = fit.h_star;
    j["aspect"] = fit.aspect;
    j["epsilon"] = fit.epsilon;
    j["iterations"] = fit.iterations;
    if (trace) {
        Json t = Json::array();
        for (const auto& [w, v] : fit.trace)
            t.push_back(Json::array({ w, v }));
        j["trace"] = std::move(t);
    }
    std::cout << j.dump(2) << "\n";
    return 0;
}

int run_layout(const std::string& input, double width, double height, bool do_fit)
{
    wf::dsl::WidgetSpec spec = load_spec(input);
    double w = width;
    double h = height;
    if (do_fit) {
        wf::fit::FitResult fit = wf::fit::fit_width(spec, spec.aspect_ratio);
        w = fit.w_star;
        h = fit.h_star;
    } else {
        if (w <= 0.0)
            w = 360.0;
        if (h <= 0.0)
            h = w / (spec.aspect_ratio > 0.0 ? spec.aspect_ratio : 1.0);
    }
    wf::layout::LayoutTree tree = wf::layout::solve_layout(spec, w, h);
    wf::layout::LayoutReport report = wf::layout::layout_report(tree);
    std::cout << wf::layout::layout_to_json(tree, report, wf::layout::violation(report)).dump(2)
              << "\n";
    return 0;
}

int run_eval_single(const std::string& gt, const std::string& gen, const std::string& gt_ocr,
                    const std::string& gen_ocr, const std::string& config_path,
                    const std::string& out_path, const GlobalOpts& g)
{
    wf::metrics::MetricConfig cfg = resolve_metric_config(config_path);
    wf::img::Image gt_img = wf::img::load_png(gt);
    wf::img::Image gen_img = wf::img::load_png(gen);
    wf::metrics::MetricReport report
        = wf::metrics::evaluate_pair(gt_img, gen_img, load_sidecar(gt_ocr), load_sidecar(gen_ocr),
                                     cfg);
    if (g.pretty)
        write_output(out_path, pretty_report(report));
    else
        write_output(out_path, report.to_json().dump(2) + "\n");
    return 0;
}

int run_eval_batch(const std::string& batch_path, const std::string& config_path,
                   const std::string& out_path, int jobs, const GlobalOpts& g)
{
    wf::metrics::MetricConfig cfg = resolve_metric_config(config_path);

    std::vector<Json> entries;
    {
        std::istringstream in(wf::io::read_file(batch_path));
        std::string line;
        size_t line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            if (line.find_first_not_of(" \t\r") == std::string::npos)
                continue;
            Json j = Json::parse(line, nullptr, false);
            if (j.is_discarded() || !j.is_object() || !j.contains("gt") || !j.contains("gen"))
                throw Error(ErrorCode::SchemaError,
                            "batch lines must be objects with \"gt\" and \"gen\"",
                            batch_path + ":" + std::to_string(line_no));
            entries.push_back(std::move(j));
        }
    }

    std::vector<std::string> lines(entries.size());
    std::vector<char> failed(entries.size(), 0);
    auto process = [&](size_t i) {
        const Json& e = entries[i];
        try {
            wf::img::Image gt_img = wf::img::load_png(e["gt"].get<std::string>());
            wf::img::Image gen_img = wf::img::load_png(e["gen"].get<std::string>());
            auto gt_ocr = load_sidecar(e.value("gtOcr", std::string()));
            auto gen_ocr = load_sidecar(e.value("genOcr", std::string()));
            auto report = wf::metrics::evaluate_pair(gt_img, gen_img, gt_ocr, gen_ocr, cfg);
            Json out;
            out["gt"] = e["gt"];
            out["gen"] = e["gen"];
            out["report"] = report.to_json();
            lines[i] = out.dump();
        } catch (const Error& err) {
            Json out;
            out["gt"] = e["gt"];
            out["gen"] = e["gen"];
            out["error"] = { { "code", wf::error_code_name(err.code()) },
                             { "message", err.what() } };
            lines[i] = out.dump();
            failed[i] = 1;
        }
    };

    size_t workers = static_cast<size_t>(std::max(1, jobs));
    workers = std::min(workers, std::max<size_t>(entries.size(), 1));
    if (workers <= 1) {
        for (size_t i = 0; i < entries.size(); ++i)
            process(i);
    } else {
        std::vector<std::thread> pool;
        for (size_t t = 0; t < workers; ++t)
            pool.emplace_back([&, t] {
                for (size_t i = t; i < entries.size(); i += workers)
                    process(i);
            });
        for (auto& th : pool)
            th.join();
    }

    std::string out;
    bool any_failed = false;
    for (size_t i = 0; i < lines.size(); ++i) {
        out += lines[i];
        out += "\n";
        any_failed = any_failed || failed[i];
    }
    write_output(out_path, out);
    (void)g;
    return any_failed ? 1 : 0;
}

int run_palette(const std::string& input, int k, int n, std::size_t cap, std::uint64_t seed,
                const GlobalOpts& g)
{
    wf::img::Image image = wf::img::load_png(input);
    wf::palette::Palette palette = wf::palette::extract_palette(image, k, n, cap, seed);
    if (g.pretty) {
        std::string out;
        char buf[64];
        for (const auto& e : palette) {
            std::snprintf(buf, sizeof buf, "%s %8.3f%%\n", e.hex.c_str(), e.weight * 100.0);
            out += buf;
        }
        std::cout << out;
        return 0;
    }
    Json arr = Json::array();
    for (const auto& e : palette)
        arr.push_back({ { "hex", e.hex }, { "percent", e.weight * 100.0 } });
    std::cout << Json({ { "palette", arr } }).dump(2) << "\n";
    return 0;
}

int run_icon_build(const std::vector<std::string>& inputs, const std::string& out_path)
{
    std::vector<wf::icons::IconRecord> records;
    for (const auto& path : inputs) {
        wf::icons::IconIndex part = wf::icons::IconIndex::load_jsonl(path);
        for (const auto& rec : part.records())
            records.push_back(rec);
    }
    wf::icons::IconIndex index = wf::icons::IconIndex::from_records(std::move(records));
    index.write_jsonl(out_path);

    Json j;
    j["records"] = index.size();
    j["visDim"] = index.vis_dim();
    j["txtDim"] = index.txt_dim();
    j["out"] = out_path;
    std::cout << j.dump(2) << "\n";
    return 0;
}

int run_icon_search(const std::string& index_path, const std::string& query_path, int k,
                    int final_n)
{
    wf::icons::IconIndex index = wf::icons::IconIndex::load_jsonl(index_path);
    Json q = parse_json_file(query_path);
    if (!q.is_object() || !q.contains("visEmbed") || !q.contains("txtEmbed"))
        throw Error(ErrorCode::SchemaError,
                    "query requires \"visEmbed\" and \"txtEmbed\" arrays", query_path);
    std::vector<double> vis = q["visEmbed"].get<std::vector<double>>();
    std::vector<double> txt = q["txtEmbed"].get<std::vector<double>>();

    auto hits = index.search(vis, txt, k, final_n);
    Json arr = Json::array();
    for (const auto& h : hits)
        arr.push_back(
            { { "id", h.id }, { "visScore", h.vis_score }, { "txtScore", h.txt_score } });
    std::cout << Json({ { "results", arr } }).dump(2) << "\n";
    return 0;
}

int run_mutate(const std::string& in_dir, const std::string& out_dir, const std::string& themes_arg,
               std::uint64_t seed, const std::string& data_dir, const std::string& icon_dir,
               int jobs)
{
    std::vector<wf::synth::Theme> themes;
    if (themes_arg == "all") {
        themes = wf::synth::all_themes();
    } else {
        std::stringstream ss(themes_arg);
        std::string name;
        while (std::getline(ss, name, ',')) {
            auto t = wf::synth::theme_from_string(name);
            if (!t)
                throw Error(ErrorCode::BadParameter, "unknown theme \"" + name + "\"");
            themes.push_back(*t);
        }
        if (themes.empty())
            throw Error(ErrorCode::BadParameter, "--themes selected nothing");
    }

    std::vector<std::pair<std::string, wf::dsl::WidgetSpec>> specs;
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(in_dir))
        if (entry.is_regular_file() && entry.path().string().ends_with(".widget.json"))
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    for (const auto& path : files) {
        std::string id = path.filename().string();
        id = id.substr(0, id.size() - std::string(".widget.json").size());
        specs.emplace_back(id, load_spec(path.string()));
    }
    if (specs.empty())
        throw Error(ErrorCode::BadParameter, "no *.widget.json files in \"" + in_dir + "\"");

    wf::synth::ThemeLibrary lib
        = wf::synth::ThemeLibrary::load((fs::path(data_dir) / "themes").string());
    wf::synth::BatchResult result
        = wf::synth::batch_generate(specs, themes, seed, lib, out_dir, icon_dir, jobs);

    Json j;
    j["bundles"] = result.items.size();
    j["failures"] = result.failures();
    j["out"] = out_dir;
    std::cout << j.dump(2) << "\n";
    return result.failures() == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app { "widgetforge: widget DSL compiler, layout fitter, and evaluation toolkit" };
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_flag("--json-errors", g.json_errors, "structured JSON errors on stderr");
    app.add_flag("--pretty", g.pretty, "human-readable tables instead of JSON");

    std::string data_dir = WF_DEFAULT_DATA_DIR;
    std::string icon_dir = (fs::path(data_dir) / "icons" / "sf").string();

    // validate
    auto* validate = app.add_subcommand("validate", "check a widget document");
    std::string v_input, v_out;
    bool v_repair = false;
    validate->add_option("input", v_input, "widget JSON file")->required();
    validate->add_flag("--repair", v_repair, "apply the repair rules");
    validate->add_option("-o,--out", v_out, "write the repaired canonical document here");

    // compile
    auto* compile = app.add_subcommand("compile", "emit HTML or React source");
    std::string c_input, c_target = "html", c_out, c_manifest, c_size, c_icons;
    bool c_fit = false;
    compile->add_option("input", c_input, "widget JSON file")->required();
    compile->add_option("--target", c_target, "html or react")
        ->check(CLI::IsMember({ "html", "react" }));
    compile->add_option("-o,--out", c_out, "output file (stdout when omitted)");
    compile->add_option("--manifest", c_manifest, "write the structural manifest here");
    compile->add_flag("--fit", c_fit, "solve the layout at the fitted width");
    compile->add_option("--size", c_size, "frame size WxH");
    compile->add_option("--icons", c_icons, "icon directory");

    // fit
    auto* fit_cmd = app.add_subcommand("fit", "find the minimal feasible width");
    std::string f_input;
    double f_aspect = 0.0, f_width = 0.0;
    int f_cap = 64;
    bool f_trace = false;
    fit_cmd->add_option("input", f_input, "widget JSON file")->required();
    fit_cmd->add_option("--aspect", f_aspect, "width/height ratio (default: shell aspectRatio)");
    fit_cmd->add_option("--width", f_width, "initial width probe");
    fit_cmd->add_option("--cap", f_cap, "layout evaluation budget");
    fit_cmd->add_flag("--trace", f_trace, "include the (width, violation) trace");

    // layout
    auto* layout_cmd = app.add_subcommand("layout", "solve and print per-node boxes");
    std::string l_input;
    double l_width = 0.0, l_height = 0.0;
    bool l_fit = false;
    layout_cmd->add_option("input", l_input, "widget JSON file")->required();
    layout_cmd->add_option("--width", l_width, "viewport width (default 360)");
    layout_cmd->add_option("--height", l_height, "viewport height (default width/aspect)");
    layout_cmd->add_flag("--fit", l_fit, "use the fitted size");

    // eval
    auto* eval_cmd = app.add_subcommand("eval", "compare a generated image against ground truth");
    std::string e_gt, e_gen, e_gt_ocr, e_gen_ocr, e_config, e_out, e_batch;
    int e_jobs = 1;
    eval_cmd->add_option("--gt", e_gt, "ground-truth PNG");
    eval_cmd->add_option("--gen", e_gen, "generated PNG");
    eval_cmd->add_option("--gt-ocr", e_gt_ocr, "ground-truth OCR sidecar JSON");
    eval_cmd->add_option("--gen-ocr", e_gen_ocr, "generated OCR sidecar JSON");
    eval_cmd->add_option("--config", e_config, "metric config JSON (default: $WIDGETFORGE_CONFIG)");
    eval_cmd->add_option("-o,--out", e_out, "output file (stdout when omitted)");
    eval_cmd->add_option("--batch", e_batch, "JSONL manifest of {gt, gen, gtOcr?, genOcr?} pairs");
    eval_cmd->add_option("--jobs", e_jobs, "parallel workers for --batch");

    // palette
    auto* palette_cmd = app.add_subcommand("palette", "extract the dominant color palette");
    std::string p_input;
    int p_k = 12, p_n = 8;
    std::size_t p_cap = 1000000;
    std::uint64_t p_seed = 0;
    palette_cmd->add_option("input", p_input, "PNG image")->required();
    palette_cmd->add_option("--k", p_k, "k-means cluster count");
    palette_cmd->add_option("--n", p_n, "entries to report");
    palette_cmd->add_option("--cap", p_cap, "sampling cap");
    palette_cmd->add_option("--seed", p_seed, "RNG seed");

    // icon build|search
    auto* icon_cmd = app.add_subcommand("icon", "embedding index operations");
    icon_cmd->require_subcommand(1);
    auto* icon_build = icon_cmd->add_subcommand("build", "validate and write an index");
    std::vector<std::string> ib_inputs;
    std::string ib_out;
    icon_build->add_option("inputs", ib_inputs, "input JSONL files")->required();
    icon_build->add_option("--out", ib_out, "output index path")->required();
    auto* icon_search = icon_cmd->add_subcommand("search", "two-stage retrieval");
    std::string is_index, is_query;
    int is_k = 50, is_final = 5;
    icon_search->add_option("--index", is_index, "index JSONL")->required();
    icon_search->add_option("--query", is_query, "query JSON with visEmbed and txtEmbed")
        ->required();
    icon_search->add_option("--k", is_k, "coarse visual candidates");
    icon_search->add_option("--final", is_final, "results after the textual re-rank");

    // mutate
    auto* mutate_cmd = app.add_subcommand("mutate", "theme-mutate specs into aligned bundles");
    std::string m_in, m_out, m_themes = "all", m_data = data_dir, m_icons;
    std::uint64_t m_seed = 0;
    int m_jobs = 1;
    mutate_cmd->add_option("--in", m_in, "directory of *.widget.json specs")->required();
    mutate_cmd->add_option("--out", m_out, "output corpus directory")->required();
    mutate_cmd->add_option("--themes", m_themes, "\"all\" or a comma-separated theme list");
    mutate_cmd->add_option("--seed", m_seed, "batch seed");
    mutate_cmd->add_option("--data", m_data, "data directory holding themes/");
    mutate_cmd->add_option("--icons", m_icons, "icon directory for emitted code");
    mutate_cmd->add_option("--jobs", m_jobs, "parallel workers");

    for (CLI::App* sub : { validate, compile, fit_cmd, layout_cmd, eval_cmd, palette_cmd,
                           icon_cmd, icon_build, icon_search, mutate_cmd })
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(validate))
            return run_validate(v_input, v_repair, v_out, g);
        if (app.got_subcommand(compile)) {
            std::string icons = c_icons.empty() ? icon_dir : c_icons;
            return run_compile(c_input, c_target, c_out, c_manifest, c_fit, c_size, icons, g);
        }
        if (app.got_subcommand(fit_cmd))
            return run_fit(f_input, f_aspect, f_width, f_cap, f_trace);
        if (app.got_subcommand(layout_cmd))
            return run_layout(l_input, l_width, l_height, l_fit);
        if (app.got_subcommand(eval_cmd)) {
            if (!e_batch.empty())
                return run_eval_batch(e_batch, e_config, e_out, e_jobs, g);
            if (e_gt.empty() || e_gen.empty())
                throw Error(ErrorCode::BadParameter, "eval needs --gt and --gen, or --batch");
            return run_eval_single(e_gt, e_gen, e_gt_ocr, e_gen_ocr, e_config, e_out, g);
        }
        if (app.got_subcommand(palette_cmd))
            return run_palette(p_input, p_k, p_n, p_cap, p_seed, g);
        if (icon_cmd->got_subcommand(icon_build))
            return run_icon_build(ib_inputs, ib_out);
        if (icon_cmd->got_subcommand(icon_search))
            return run_icon_search(is_index, is_query, is_k, is_final);
        if (app.got_subcommand(mutate_cmd)) {
            std::string icons = m_icons.empty()
                ? (fs::path(m_data) / "icons" / "sf").string()
                : m_icons;
            return run_mutate(m_in, m_out, m_themes, m_seed, m_data, icons, m_jobs);
        }
    } catch (const Error& e) {
        print_error(e, g.json_errors);
        return e.code() == ErrorCode::BadParameter ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
