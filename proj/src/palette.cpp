#include "widgetforge/palette.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <random>

#include "widgetforge/error.hpp"

namespace wf::palette {

namespace {

constexpr uint8_t kAlphaFloor = 8;
constexpr int kMaxIterations = 50;
constexpr double kShiftTolerance = 1e-4;

using Point = std::array<double, 3>;

double dist2(const Point& a, const Point& b)
{
    double dr = a[0] - b[0];
    double dg = a[1] - b[1];
    double db = a[2] - b[2];
    return dr * dr + dg * dg + db * db;
}

size_t nearest(const Point& p, const std::vector<Point>& centroids)
{
    size_t best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (size_t c = 0; c < centroids.size(); ++c) {
        double d = dist2(p, centroids[c]);
        if (d < best_d) {
            best_d = d;
            best = c;
        }
    }
    return best;
}

std::vector<Point> plus_plus_seeds(const std::vector<Point>& points, int k, std::mt19937_64& rng)
{
    std::vector<Point> centroids;
    centroids.reserve(static_cast<size_t>(k));
    centroids.push_back(points[rng() % points.size()]);

    std::vector<double> d2(points.size());
    while (centroids.size() < static_cast<size_t>(k)) {
        double total = 0.0;
        for (size_t i = 0; i < points.size(); ++i) {
            d2[i] = dist2(points[i], centroids[0]);
            for (size_t c = 1; c < centroids.size(); ++c)
                d2[i] = std::min(d2[i], dist2(points[i], centroids[c]));
            total += d2[i];
        }
        if (total <= 0.0)
            break; // every point coincides with a centroid already
        double r = std::ldexp(static_cast<double>(rng()), -64) * total;
        size_t chosen = points.size() - 1;
        double acc = 0.0;
        for (size_t i = 0; i < points.size(); ++i) {
            acc += d2[i];
            if (acc >= r) {
                chosen = i;
                break;
            }
        }
        centroids.push_back(points[chosen]);
    }
    return centroids;
}

std::string hex_of(const Point& p)
{
    auto ch = [](double v) {
        long x = std::lround(std::clamp(v, 0.0, 255.0));
        return static_cast<unsigned>(x);
    };
    char buf[8];
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x", ch(p[0]), ch(p[1]), ch(p[2]));
    return buf;
}

} // namespace

std::vector<Point> kmeans(const std::vector<Point>& points, int k, std::uint64_t seed)
{
    if (points.empty() || k <= 0)
        return {};

    std::mt19937_64 rng(seed);
    std::vector<Point> centroids = plus_plus_seeds(points, k, rng);

    std::vector<size_t> assign(points.size(), 0);
    for (int iter = 0; iter < kMaxIterations; ++iter) {
        for (size_t i = 0; i < points.size(); ++i)
            assign[i] = nearest(points[i], centroids);

        std::vector<Point> sums(centroids.size(), Point { 0, 0, 0 });
        std::vector<size_t> counts(centroids.size(), 0);
        for (size_t i = 0; i < points.size(); ++i) {
            for (int ch = 0; ch < 3; ++ch)
                sums[assign[i]][ch] += points[i][ch];
            ++counts[assign[i]];
        }

        // Re-seed an empty cluster at the point farthest from its centroid.
        for (size_t c = 0; c < centroids.size(); ++c) {
            if (counts[c] > 0)
                continue;
            size_t far = 0;
            double far_d = -1.0;
            for (size_t i = 0; i < points.size(); ++i) {
                double d = dist2(points[i], centroids[assign[i]]);
                if (d > far_d) {
                    far_d = d;
                    far = i;
                }
            }
            centroids[c] = points[far];
            counts[c] = 1;
            sums[c] = points[far];
            // keep the donor cluster's stats approximate; next sweep fixes them
        }

        double max_shift = 0.0;
        for (size_t c = 0; c < centroids.size(); ++c) {
            Point next = centroids[c];
            if (counts[c] > 0)
                for (int ch = 0; ch < 3; ++ch)
                    next[ch] = sums[c][ch] / static_cast<double>(counts[c]);
            max_shift = std::max(max_shift, std::sqrt(dist2(next, centroids[c])));
            centroids[c] = next;
        }
        if (max_shift < kShiftTolerance)
            break;
    }
    return centroids;
}

Palette extract_palette(const img::Image& image, int k, int n, std::size_t cap, std::uint64_t seed)
{
    if (k < 1 || n < 1 || k < n)
        throw Error(ErrorCode::BadParameter, "palette requires K >= n >= 1");
    if (cap < 1)
        throw Error(ErrorCode::BadParameter, "pixel budget must be positive");

    std::vector<Point> opaque;
    opaque.reserve(image.pixel_count());
    for (size_t i = 0; i < image.pixel_count(); ++i) {
        const uint8_t* p = image.rgba.data() + i * 4;
        if (p[3] >= kAlphaFloor)
            opaque.push_back(Point { static_cast<double>(p[0]), static_cast<double>(p[1]),
                                     static_cast<double>(p[2]) });
    }
    if (opaque.empty())
        throw Error(ErrorCode::AllTransparent, "image has no opaque pixels");

    std::vector<Point> sample;
    if (opaque.size() > cap) {
        std::mt19937_64 rng(seed);
        std::vector<uint32_t> idx(opaque.size());
        for (size_t i = 0; i < idx.size(); ++i)
            idx[i] = static_cast<uint32_t>(i);
        for (size_t i = 0; i < cap; ++i) {
            size_t j = i + static_cast<size_t>(rng() % (idx.size() - i));
            std::swap(idx[i], idx[j]);
        }
        sample.reserve(cap);
        for (size_t i = 0; i < cap; ++i)
            sample.push_back(opaque[idx[i]]);
    } else {
        sample = opaque;
    }

    std::vector<Point> centroids = kmeans(sample, k, seed);

    std::vector<size_t> counts(centroids.size(), 0);
    for (const Point& p : opaque)
        ++counts[nearest(p, centroids)];

    std::map<std::string, double> by_hex;
    for (size_t c = 0; c < centroids.size(); ++c)
        if (counts[c] > 0)
            by_hex[hex_of(centroids[c])] += static_cast<double>(counts[c]);

    std::vector<PaletteEntry> entries;
    for (const auto& [hex, count] : by_hex)
        entries.push_back({ hex, count / static_cast<double>(opaque.size()) });
    std::sort(entries.begin(), entries.end(), [](const PaletteEntry& a, const PaletteEntry& b) {
        if (a.weight != b.weight)
            return a.weight > b.weight;
        return a.hex < b.hex;
    });
    if (entries.size() > static_cast<size_t>(n))
        entries.resize(static_cast<size_t>(n));

    double kept = 0.0;
    for (const auto& e : entries)
        kept += e.weight;
    if (kept > 0.0)
        for (auto& e : entries)
            e.weight /= kept;
    return entries;
}

} // namespace wf::palette
