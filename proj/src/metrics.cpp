#include "widgetforge/metrics.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

#include "widgetforge/emd.hpp"
#include "widgetforge/error.hpp"
#include "widgetforge/ssim.hpp"

namespace wf::metrics {

namespace {

using dsl::Json;

double clamp_score(double s) { return std::clamp(s, 0.0, 100.0); }

MetricValue scored(double value, double scale)
{
    MetricValue m;
    m.available = true;
    m.value = value;
    m.score = clamp_score(100.0 * std::exp(-value / scale));
    return m;
}

MetricValue fixed_score(double value, double score)
{
    MetricValue m;
    m.available = true;
    m.value = value;
    m.score = clamp_score(score);
    return m;
}

MetricValue unavailable(std::string reason)
{
    MetricValue m;
    m.reason = std::move(reason);
    return m;
}

// Sorted-sample percentile with linear interpolation between ranks.
double percentile(const std::vector<double>& sorted, double p)
{
    if (sorted.empty())
        return 0.0;
    if (sorted.size() == 1)
        return sorted[0];
    double rank = p / 100.0 * static_cast<double>(sorted.size() - 1);
    size_t lo = static_cast<size_t>(std::floor(rank));
    size_t hi = std::min(lo + 1, sorted.size() - 1);
    double frac = rank - static_cast<double>(lo);
    return sorted[lo] * (1.0 - frac) + sorted[hi] * frac;
}

// Per-image statistics shared by several metrics.
struct ImageStats {
    int width = 0;
    int height = 0;
    std::vector<double> luma;        // row-major, [0, 1]
    std::vector<double> sorted_luma; // ascending
    std::vector<double> hue_hist;
    std::vector<double> sat_hist;

    static ImageStats compute(const img::Image& image, const MetricConfig& cfg)
    {
        ImageStats st;
        st.width = image.width;
        st.height = image.height;
        std::vector<float> lf = img::luminance(image);
        st.luma.assign(lf.begin(), lf.end());
        st.sorted_luma = st.luma;
        std::sort(st.sorted_luma.begin(), st.sorted_luma.end());

        st.hue_hist.assign(static_cast<size_t>(cfg.hue_bins), 0.0);
        st.sat_hist.assign(static_cast<size_t>(cfg.sat_bins), 0.0);
        for (size_t i = 0; i < image.pixel_count(); ++i) {
            const uint8_t* p = image.rgba.data() + i * 4;
            auto hsv = img::rgb_to_hsv(p[0], p[1], p[2]);
            int hb = std::min(cfg.hue_bins - 1,
                              static_cast<int>(hsv[0] / 360.0 * cfg.hue_bins));
            int sb = std::min(cfg.sat_bins - 1, static_cast<int>(hsv[1] * cfg.sat_bins));
            st.hue_hist[hb] += 1.0;
            st.sat_hist[sb] += 1.0;
        }
        return st;
    }

    double contrast() const
    {
        double l5 = percentile(sorted_luma, 5.0);
        double l95 = percentile(sorted_luma, 95.0);
        return (l95 + 0.05) / (l5 + 0.05);
    }

    // bg - fg gap: median luminance minus the mean of the darkest decile.
    double polarity_gap() const
    {
        if (sorted_luma.empty())
            return 0.0;
        double median = percentile(sorted_luma, 50.0);
        size_t k = std::max<size_t>(1, sorted_luma.size() / 10);
        double dark = std::accumulate(sorted_luma.begin(), sorted_luma.begin() + k, 0.0)
                      / static_cast<double>(k);
        return median - dark;
    }
};

int sign_of(double gap)
{
    if (gap > 1e-9)
        return 1;
    if (gap < -1e-9)
        return -1;
    return 0;
}

std::set<std::string> token_set(const OcrSidecar& ocr)
{
    std::set<std::string> tokens;
    for (const auto& box : ocr.boxes) {
        std::istringstream in(box.text);
        std::string tok;
        while (in >> tok) {
            for (char& c : tok)
                c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
            tokens.insert(tok);
        }
    }
    return tokens;
}

// Mean per-box contrast ratio; nullopt when no box covers any pixel.
std::optional<double> local_contrast(const ImageStats& st, const OcrSidecar& ocr)
{
    double sum = 0.0;
    int used = 0;
    for (const auto& box : ocr.boxes) {
        int x0 = std::max(0, static_cast<int>(std::floor(box.x1)));
        int y0 = std::max(0, static_cast<int>(std::floor(box.y1)));
        int x1 = std::min(st.width, static_cast<int>(std::ceil(box.x2)));
        int y1 = std::min(st.height, static_cast<int>(std::ceil(box.y2)));
        if (x0 >= x1 || y0 >= y1)
            continue;
        std::vector<double> region;
        region.reserve(static_cast<size_t>(x1 - x0) * (y1 - y0));
        for (int y = y0; y < y1; ++y)
            for (int x = x0; x < x1; ++x)
                region.push_back(st.luma[static_cast<size_t>(y) * st.width + x]);
        std::sort(region.begin(), region.end());
        double l5 = percentile(region, 5.0);
        double l95 = percentile(region, 95.0);
        sum += (l95 + 0.05) / (l5 + 0.05);
        ++used;
    }
    if (used == 0)
        return std::nullopt;
    return sum / used;
}

// Component count after discarding areas below the tiny-region floor.
int significant_components(const mask::Mask& m, double tiny_threshold)
{
    double floor_area = tiny_threshold * static_cast<double>(m.width) * m.height;
    int n = 0;
    for (int area : mask::component_areas(m))
        if (static_cast<double>(area) >= floor_area)
            ++n;
    return n;
}

void require(bool ok, const std::string& what)
{
    if (!ok)
        throw Error(ErrorCode::BadParameter, what);
}

} // namespace

MetricConfig MetricConfig::from_json(const Json& j)
{
    MetricConfig cfg;
    require(j.is_object(), "metric config must be a JSON object");
    for (const auto& [key, value] : j.items()) {
        auto num = [&](const char* name) {
            require(value.is_number(), std::string(name) + " must be a number");
            return value.get<double>();
        };
        if (key == "s_margin")
            cfg.s_margin = num("s_margin");
        else if (key == "s_content")
            cfg.s_content = num("s_content");
        else if (key == "s_area")
            cfg.s_area = num("s_area");
        else if (key == "s_contrast")
            cfg.s_contrast = num("s_contrast");
        else if (key == "s_loccon")
            cfg.s_loccon = num("s_loccon");
        else if (key == "alpha")
            cfg.alpha = num("alpha");
        else if (key == "beta")
            cfg.beta = num("beta");
        else if (key == "gamma")
            cfg.gamma = num("gamma");
        else if (key == "hue_bins")
            cfg.hue_bins = static_cast<int>(num("hue_bins"));
        else if (key == "sat_bins")
            cfg.sat_bins = static_cast<int>(num("sat_bins"));
        else if (key == "tiny_threshold")
            cfg.tiny_threshold = num("tiny_threshold");
        else if (key == "one_sided_penalty")
            cfg.one_sided_penalty = num("one_sided_penalty");
        else if (key == "s_geo")
            cfg.s_geo = num("s_geo");
        else
            throw Error(ErrorCode::BadParameter, "unknown metric config key: " + key);
    }
    require(cfg.s_margin > 0 && cfg.s_content > 0 && cfg.s_area > 0 && cfg.s_contrast > 0
                && cfg.s_loccon > 0 && cfg.alpha > 0 && cfg.beta > 0 && cfg.gamma > 0
                && cfg.s_geo > 0,
            "metric scales must be positive");
    require(cfg.hue_bins >= 2 && cfg.sat_bins >= 2, "histogram bin counts must be at least 2");
    require(cfg.tiny_threshold >= 0, "tiny_threshold must be non-negative");
    return cfg;
}

Json MetricConfig::to_json() const
{
    return Json { { "s_margin", s_margin },
                  { "s_content", s_content },
                  { "s_area", s_area },
                  { "s_contrast", s_contrast },
                  { "s_loccon", s_loccon },
                  { "alpha", alpha },
                  { "beta", beta },
                  { "gamma", gamma },
                  { "hue_bins", hue_bins },
                  { "sat_bins", sat_bins },
                  { "tiny_threshold", tiny_threshold },
                  { "one_sided_penalty", one_sided_penalty },
                  { "s_geo", s_geo } };
}

OcrSidecar OcrSidecar::from_json(const Json& j)
{
    OcrSidecar out;
    if (!j.is_object() || !j.contains("boxes") || !j["boxes"].is_array())
        throw Error(ErrorCode::SchemaError, "ocr sidecar must be an object with a boxes array");
    for (const auto& b : j["boxes"]) {
        if (!b.is_object())
            throw Error(ErrorCode::SchemaError, "ocr box must be an object");
        OcrBox box;
        box.x1 = b.value("x1", 0.0);
        box.y1 = b.value("y1", 0.0);
        box.x2 = b.value("x2", 0.0);
        box.y2 = b.value("y2", 0.0);
        box.text = b.value("text", std::string());
        if (!(box.x1 < box.x2) || !(box.y1 < box.y2))
            throw Error(ErrorCode::SchemaError, "ocr box must satisfy x1<x2 and y1<y2");
        out.boxes.push_back(std::move(box));
    }
    return out;
}

Json MetricReport::to_json() const
{
    Json m = Json::object();
    for (const auto& [name, mv] : metrics) {
        if (mv.available)
            m[name] = Json { { "score", mv.score }, { "value", mv.value } };
        else
            m[name] = Json { { "score", nullptr }, { "reason", mv.reason } };
    }
    return Json { { "metrics", m }, { "config", config.to_json() } };
}

double margin_asymmetry(const mask::Margins& gt, const mask::Margins& gen)
{
    double d[4] = { std::abs(gt.top - gen.top), std::abs(gt.bottom - gen.bottom),
                    std::abs(gt.left - gen.left), std::abs(gt.right - gen.right) };
    double mu = (d[0] + d[1] + d[2] + d[3]) / 4.0;
    if (mu < 1e-6)
        return 0.0;
    double var = 0.0;
    for (double v : d)
        var += (v - mu) * (v - mu);
    var /= 4.0;
    return std::sqrt(var) / mu;
}

double contrast_ratio(std::vector<double> luma)
{
    std::sort(luma.begin(), luma.end());
    double l5 = percentile(luma, 5.0);
    double l95 = percentile(luma, 95.0);
    return (l95 + 0.05) / (l5 + 0.05);
}

double geometry_distance(double gt_w, double gt_h, double gen_w, double gen_h)
{
    double ar_gt = gt_w / gt_h;
    double ar_gen = gen_w / gen_h;
    return std::abs(std::log(ar_gen / ar_gt))
           + 0.5 * (std::abs(std::log(gen_w / gt_w)) + std::abs(std::log(gen_h / gt_h)));
}

MetricReport evaluate_pair(const img::Image& gt, const img::Image& gen,
                           const std::optional<OcrSidecar>& gt_ocr,
                           const std::optional<OcrSidecar>& gen_ocr, const MetricConfig& cfg)
{
    MetricReport report;
    report.config = cfg;

    bool same_dims = gt.width == gen.width && gt.height == gen.height;
    img::Image gen_resized = same_dims ? gen : img::resize_bilinear(gen, gt.width, gt.height);

    // Mask metrics on the common grid.
    mask::Mask mask_gt = mask::content_mask(gt);
    mask::Mask mask_gen = mask::content_mask(gen_resized);
    bool any_gt = mask_gt.any();
    bool any_gen = mask_gen.any();

    if (!any_gt && !any_gen) {
        report.metrics["margin"] = fixed_score(0.0, 100.0);
        report.metrics["content"] = fixed_score(0.0, 100.0);
        report.metrics["area"] = fixed_score(0.0, 100.0);
    } else if (!any_gt || !any_gen) {
        std::string side = !any_gt ? "ground-truth" : "generated";
        std::string reason = "empty structural mask on the " + side + " image";
        report.metrics["margin"] = unavailable(reason);
        report.metrics["content"] = unavailable(reason);
        report.metrics["area"] = unavailable(reason);
    } else {
        mask::Margins mg_gt = mask_margins(mask_gt);
        mask::Margins mg_gen = mask_margins(mask_gen);
        report.metrics["margin"] = scored(margin_asymmetry(mg_gt, mg_gen), cfg.s_margin);

        auto [bw_gt, bh_gt] = mask_bbox_size(mask_gt);
        auto [bw_gen, bh_gen] = mask_bbox_size(mask_gen);
        double ar_gt = static_cast<double>(bw_gt) / bh_gt;
        double ar_gen = static_cast<double>(bw_gen) / bh_gen;
        report.metrics["content"] = scored(std::abs(std::log(ar_gt / ar_gen)), cfg.s_content);

        int n_gt = significant_components(mask_gt, cfg.tiny_threshold);
        int n_gen = significant_components(mask_gen, cfg.tiny_threshold);
        if (n_gt == 0 && n_gen == 0) {
            report.metrics["area"] = fixed_score(0.0, 100.0);
        } else if (n_gt == 0 || n_gen == 0) {
            report.metrics["area"] = unavailable("no component above the tiny-region floor");
        } else {
            report.metrics["area"] = scored(std::abs(1.0 / n_gt - 1.0 / n_gen), cfg.s_area);
        }
    }

    // Color and tone statistics on the original images.
    ImageStats st_gt = ImageStats::compute(gt, cfg);
    ImageStats st_gen = ImageStats::compute(gen, cfg);

    report.metrics["contrast"] = scored(std::abs(st_gt.contrast() - st_gen.contrast()),
                                        cfg.s_contrast);
    report.metrics["palette"] = scored(emd::wasserstein1(st_gt.hue_hist, st_gen.hue_hist),
                                       cfg.alpha);
    report.metrics["vibrancy"] = scored(emd::wasserstein1(st_gt.sat_hist, st_gen.sat_hist),
                                        cfg.beta);

    double gap_gt = st_gt.polarity_gap();
    double gap_gen = st_gen.polarity_gap();
    double gap_diff = std::abs(gap_gt - gap_gen);
    if (sign_of(gap_gt) != sign_of(gap_gen))
        report.metrics["polarity"] = fixed_score(gap_diff, 0.0);
    else
        report.metrics["polarity"] = fixed_score(gap_diff, 100.0 * std::exp(-cfg.gamma * gap_diff));

    // Text metrics require both sidecars.
    if (!gt_ocr || !gen_ocr) {
        std::string reason = "ocr sidecar absent";
        report.metrics["text"] = unavailable(reason);
        report.metrics["loccon"] = unavailable(reason);
    } else {
        std::set<std::string> w_gt = token_set(*gt_ocr);
        std::set<std::string> w_gen = token_set(*gen_ocr);
        if (w_gt.empty() && w_gen.empty()) {
            report.metrics["text"] = fixed_score(0.0, 100.0);
        } else if (w_gt.empty() || w_gen.empty()) {
            report.metrics["text"] = fixed_score(1.0, 0.0);
        } else {
            std::vector<std::string> tmp;
            std::set_intersection(w_gt.begin(), w_gt.end(), w_gen.begin(), w_gen.end(),
                                  std::back_inserter(tmp));
            double inter = static_cast<double>(tmp.size());
            double uni = static_cast<double>(w_gt.size() + w_gen.size()) - inter;
            double jac = inter / uni;
            report.metrics["text"] = fixed_score(1.0 - jac, 100.0 * jac);
        }

        std::optional<double> lc_gt = local_contrast(st_gt, *gt_ocr);
        std::optional<double> lc_gen = local_contrast(st_gen, *gen_ocr);
        if (!lc_gt && !lc_gen)
            report.metrics["loccon"] = fixed_score(0.0, 100.0);
        else if (!lc_gt || !lc_gen)
            report.metrics["loccon"] = fixed_score(1.0, cfg.one_sided_penalty);
        else
            report.metrics["loccon"] = scored(std::abs(*lc_gt - *lc_gen), cfg.s_loccon);
    }

    // SSIM on the common grid.
    {
        std::vector<float> la = img::luminance(gt);
        std::vector<float> lb = img::luminance(gen_resized);
        std::vector<double> a(la.begin(), la.end());
        std::vector<double> b(lb.begin(), lb.end());
        double v = ssim::mean_ssim(a, b, gt.width, gt.height);
        MetricValue m;
        m.available = true;
        m.value = v;
        m.score = v;
        report.metrics["ssim"] = m;
    }

    report.metrics["geometry"] = scored(
        geometry_distance(gt.width, gt.height, gen.width, gen.height), cfg.s_geo);

    return report;
}

} // namespace wf::metrics
