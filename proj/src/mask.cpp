#include "widgetforge/mask.hpp"

#include <algorithm>
#include <cmath>

namespace wf::mask {

namespace {

// 8-bit gradient level per pixel, clamped Sobel on the luminance plane.
std::vector<int> gradient_levels(const img::Image& image)
{
    int w = image.width;
    int h = image.height;
    std::vector<float> luma = img::luminance(image);
    std::vector<double> mag(static_cast<size_t>(w) * h, 0.0);

    auto at = [&](int x, int y) {
        x = std::clamp(x, 0, w - 1);
        y = std::clamp(y, 0, h - 1);
        return static_cast<double>(luma[static_cast<size_t>(y) * w + x]);
    };

    double max_mag = 0.0;
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            double gx = -at(x - 1, y - 1) - 2.0 * at(x - 1, y) - at(x - 1, y + 1)
                        + at(x + 1, y - 1) + 2.0 * at(x + 1, y) + at(x + 1, y + 1);
            double gy = -at(x - 1, y - 1) - 2.0 * at(x, y - 1) - at(x + 1, y - 1)
                        + at(x - 1, y + 1) + 2.0 * at(x, y + 1) + at(x + 1, y + 1);
            double m = std::sqrt(gx * gx + gy * gy);
            mag[static_cast<size_t>(y) * w + x] = m;
            max_mag = std::max(max_mag, m);
        }

    std::vector<int> levels(mag.size(), 0);
    if (max_mag <= 0.0)
        return levels; // constant image
    for (size_t i = 0; i < mag.size(); ++i)
        levels[i] = std::min(255, static_cast<int>(std::lround(mag[i] / max_mag * 255.0)));
    return levels;
}

// First threshold maximizing the between-class variance; foreground is
// strictly above it.
int otsu_threshold(const std::vector<int>& levels)
{
    long long hist[256] = {};
    for (int v : levels)
        ++hist[v];
    long long total = static_cast<long long>(levels.size());

    double sum_all = 0.0;
    for (int i = 0; i < 256; ++i)
        sum_all += static_cast<double>(i) * static_cast<double>(hist[i]);

    int best_t = 0;
    double best_var = -1.0;
    long long w0 = 0;
    double sum0 = 0.0;
    for (int t = 0; t < 256; ++t) {
        w0 += hist[t];
        sum0 += static_cast<double>(t) * static_cast<double>(hist[t]);
        long long w1 = total - w0;
        if (w0 == 0 || w1 == 0)
            continue;
        double mu0 = sum0 / static_cast<double>(w0);
        double mu1 = (sum_all - sum0) / static_cast<double>(w1);
        double var = static_cast<double>(w0) * static_cast<double>(w1) * (mu0 - mu1) * (mu0 - mu1);
        if (var > best_var + 1e-12) {
            best_var = var;
            best_t = t;
        }
    }
    return best_t;
}

Mask dilate3x3(const Mask& m)
{
    Mask out { m.width, m.height, std::vector<uint8_t>(m.data.size(), 0) };
    for (int y = 0; y < m.height; ++y)
        for (int x = 0; x < m.width; ++x) {
            uint8_t v = 0;
            for (int dy = -1; dy <= 1 && !v; ++dy)
                for (int dx = -1; dx <= 1; ++dx) {
                    int nx = x + dx;
                    int ny = y + dy;
                    if (nx >= 0 && nx < m.width && ny >= 0 && ny < m.height && m.at(nx, ny)) {
                        v = 1;
                        break;
                    }
                }
            out.data[static_cast<size_t>(y) * m.width + x] = v;
        }
    return out;
}

} // namespace

bool Mask::any() const
{
    return std::any_of(data.begin(), data.end(), [](uint8_t v) { return v != 0; });
}

Mask content_mask(const img::Image& image)
{
    Mask m { image.width, image.height,
             std::vector<uint8_t>(static_cast<size_t>(image.width) * image.height, 0) };
    if (image.width <= 0 || image.height <= 0)
        return m;

    std::vector<int> levels = gradient_levels(image);
    bool all_zero = std::all_of(levels.begin(), levels.end(), [](int v) { return v == 0; });
    if (all_zero)
        return m;

    int t = otsu_threshold(levels);
    for (size_t i = 0; i < levels.size(); ++i)
        m.data[i] = levels[i] > t ? 1 : 0;

    m = dilate3x3(m);
    m = dilate3x3(m);
    return m;
}

Margins mask_margins(const Mask& m)
{
    Margins out;
    int min_x = m.width;
    int max_x = -1;
    int min_y = m.height;
    int max_y = -1;
    for (int y = 0; y < m.height; ++y)
        for (int x = 0; x < m.width; ++x)
            if (m.at(x, y)) {
                min_x = std::min(min_x, x);
                max_x = std::max(max_x, x);
                min_y = std::min(min_y, y);
                max_y = std::max(max_y, y);
            }
    if (max_x < 0)
        return out;
    out.defined = true;
    out.left = min_x;
    out.right = m.width - 1 - max_x;
    out.top = min_y;
    out.bottom = m.height - 1 - max_y;
    return out;
}

std::pair<int, int> mask_bbox_size(const Mask& m)
{
    Margins mg = mask_margins(m);
    if (!mg.defined)
        return { 0, 0 };
    int bw = m.width - static_cast<int>(mg.left) - static_cast<int>(mg.right);
    int bh = m.height - static_cast<int>(mg.top) - static_cast<int>(mg.bottom);
    return { bw, bh };
}

std::vector<int> component_areas(const Mask& m)
{
    std::vector<int> areas;
    std::vector<uint8_t> seen(m.data.size(), 0);
    std::vector<std::pair<int, int>> stack;

    for (int sy = 0; sy < m.height; ++sy)
        for (int sx = 0; sx < m.width; ++sx) {
            size_t si = static_cast<size_t>(sy) * m.width + sx;
            if (!m.data[si] || seen[si])
                continue;
            int area = 0;
            seen[si] = 1;
            stack.emplace_back(sx, sy);
            while (!stack.empty()) {
                auto [x, y] = stack.back();
                stack.pop_back();
                ++area;
                for (int dy = -1; dy <= 1; ++dy)
                    for (int dx = -1; dx <= 1; ++dx) {
                        if (dx == 0 && dy == 0)
                            continue;
                        int nx = x + dx;
                        int ny = y + dy;
                        if (nx < 0 || nx >= m.width || ny < 0 || ny >= m.height)
                            continue;
                        size_t ni = static_cast<size_t>(ny) * m.width + nx;
                        if (m.data[ni] && !seen[ni]) {
                            seen[ni] = 1;
                            stack.emplace_back(nx, ny);
                        }
                    }
            }
            areas.push_back(area);
        }
    return areas;
}

} // namespace wf::mask
