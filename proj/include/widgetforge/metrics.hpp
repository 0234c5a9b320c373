#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "widgetforge/dsl.hpp"
#include "widgetforge/image.hpp"
#include "widgetforge/mask.hpp"

namespace wf::metrics {

struct MetricConfig {
    double s_margin = 1.0;
    double s_content = 0.5;
    double s_area = 0.1;
    double s_contrast = 5.0;
    double s_loccon = 5.0;
    double alpha = 0.15;
    double beta = 0.15;
    double gamma = 2.0;
    int hue_bins = 36;
    int sat_bins = 32;
    double tiny_threshold = 0.0005; // component area floor, fraction of image area
    double one_sided_penalty = 0.0;
    double s_geo = 0.2;

    // Partial override; unknown keys or out-of-range values throw BadParameter.
    static MetricConfig from_json(const dsl::Json& j);
    dsl::Json to_json() const;
};

struct MetricValue {
    bool available = false;
    double value = 0.0;  // raw discrepancy (or the SSIM value itself)
    double score = 0.0;  // similarity in [0, 100]; SSIM keeps its [0, 1] value
    std::string reason;  // set when unavailable
};

struct OcrBox {
    double x1 = 0.0;
    double y1 = 0.0;
    double x2 = 0.0;
    double y2 = 0.0;
    std::string text;
};

struct OcrSidecar {
    std::vector<OcrBox> boxes;

    static OcrSidecar from_json(const dsl::Json& j);
};

struct MetricReport {
    // Keys: margin, content, area, text, contrast, loccon, palette, vibrancy,
    // polarity, ssim, geometry.
    std::map<std::string, MetricValue> metrics;
    MetricConfig config;

    dsl::Json to_json() const;
};

// Margins asymmetry value sigma/mu of |m_gt - m_gen| (0 when mu < 1e-6).
double margin_asymmetry(const mask::Margins& gt, const mask::Margins& gen);

// (L95 + 0.05) / (L5 + 0.05) over a luminance sample in [0, 1].
double contrast_ratio(std::vector<double> luma);

// |log(AR ratio)| + 0.5 (|log(W ratio)| + |log(H ratio)|).
double geometry_distance(double gt_w, double gt_h, double gen_w, double gen_h);

// Full pairwise evaluation. Never throws for content reasons: any metric that
// cannot be computed is recorded as unavailable with a reason.
MetricReport evaluate_pair(const img::Image& gt, const img::Image& gen,
                           const std::optional<OcrSidecar>& gt_ocr,
                           const std::optional<OcrSidecar>& gen_ocr,
                           const MetricConfig& cfg = {});

} // namespace wf::metrics
