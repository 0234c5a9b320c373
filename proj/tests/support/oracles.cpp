#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace wf::test {

double emd_transport(const std::vector<double>& a, const std::vector<double>& b)
{
    size_t n = std::max(a.size(), b.size());
    if (n == 0)
        return 0.0;
    std::vector<double> p(n, 0.0);
    std::vector<double> q(n, 0.0);
    for (size_t i = 0; i < a.size(); ++i)
        p[i] = std::max(a[i], 0.0);
    for (size_t i = 0; i < b.size(); ++i)
        q[i] = std::max(b[i], 0.0);
    double ta = 0.0;
    double tb = 0.0;
    for (size_t i = 0; i < n; ++i) {
        ta += p[i];
        tb += q[i];
    }
    if (ta <= 0.0 || tb <= 0.0)
        return 0.0;
    for (size_t i = 0; i < n; ++i) {
        p[i] /= ta;
        q[i] /= tb;
    }

    double cost = 0.0;
    size_t i = 0;
    size_t j = 0;
    double supply = p[0];
    double demand = q[0];
    while (true) {
        while (i < n && supply <= 0.0) {
            ++i;
            if (i < n)
                supply = p[i];
        }
        while (j < n && demand <= 0.0) {
            ++j;
            if (j < n)
                demand = q[j];
        }
        if (i >= n || j >= n)
            break;
        double flow = std::min(supply, demand);
        cost += flow * std::abs(static_cast<double>(i) - static_cast<double>(j));
        supply -= flow;
        demand -= flow;
    }
    return cost;
}

namespace {

std::vector<double> gaussian11()
{
    std::vector<double> g(11);
    double sum = 0.0;
    for (int i = 0; i < 11; ++i) {
        double d = i - 5;
        g[i] = std::exp(-d * d / (2.0 * 1.5 * 1.5));
        sum += g[i];
    }
    for (double& v : g)
        v /= sum;
    return g;
}

double window_term(const std::vector<float>& a, const std::vector<float>& b, int width, int cx,
                   int cy, const std::vector<double>& g)
{
    constexpr double c1 = 0.01 * 0.01;
    constexpr double c2 = 0.03 * 0.03;
    double mu_a = 0.0;
    double mu_b = 0.0;
    for (int dy = -5; dy <= 5; ++dy)
        for (int dx = -5; dx <= 5; ++dx) {
            double w = g[dy + 5] * g[dx + 5];
            size_t idx = static_cast<size_t>(cy + dy) * width + (cx + dx);
            mu_a += w * a[idx];
            mu_b += w * b[idx];
        }
    double var_a = 0.0;
    double var_b = 0.0;
    double cov = 0.0;
    for (int dy = -5; dy <= 5; ++dy)
        for (int dx = -5; dx <= 5; ++dx) {
            double w = g[dy + 5] * g[dx + 5];
            size_t idx = static_cast<size_t>(cy + dy) * width + (cx + dx);
            double da = a[idx] - mu_a;
            double db = b[idx] - mu_b;
            var_a += w * da * da;
            var_b += w * db * db;
            cov += w * da * db;
        }
    return ((2.0 * mu_a * mu_b + c1) * (2.0 * cov + c2))
        / ((mu_a * mu_a + mu_b * mu_b + c1) * (var_a + var_b + c2));
}

} // namespace

double ssim_direct(const std::vector<float>& a, const std::vector<float>& b, int width, int height)
{
    constexpr double c1 = 0.01 * 0.01;
    constexpr double c2 = 0.03 * 0.03;
    if (width < 11 || height < 11) {
        double mu_a = 0.0;
        double mu_b = 0.0;
        size_t n = static_cast<size_t>(width) * height;
        for (size_t i = 0; i < n; ++i) {
            mu_a += a[i];
            mu_b += b[i];
        }
        mu_a /= static_cast<double>(n);
        mu_b /= static_cast<double>(n);
        double var_a = 0.0;
        double var_b = 0.0;
        double cov = 0.0;
        for (size_t i = 0; i < n; ++i) {
            double da = a[i] - mu_a;
            double db = b[i] - mu_b;
            var_a += da * da;
            var_b += db * db;
            cov += da * db;
        }
        var_a /= static_cast<double>(n);
        var_b /= static_cast<double>(n);
        cov /= static_cast<double>(n);
        return ((2.0 * mu_a * mu_b + c1) * (2.0 * cov + c2))
            / ((mu_a * mu_a + mu_b * mu_b + c1) * (var_a + var_b + c2));
    }

    static const std::vector<double> g = gaussian11();
    double sum = 0.0;
    size_t count = 0;
    for (int cy = 5; cy < height - 5; ++cy)
        for (int cx = 5; cx < width - 5; ++cx) {
            sum += window_term(a, b, width, cx, cy, g);
            ++count;
        }
    return sum / static_cast<double>(count);
}

double brute_min_feasible(const std::function<double(double)>& psi, double max_w)
{
    for (double w = 1.0; w <= max_w; w += 1.0)
        if (psi(w) <= 0.0)
            return w;
    return 0.0;
}

namespace {

std::vector<double> unit(const std::vector<double>& v)
{
    double sq = 0.0;
    for (double x : v)
        sq += x * x;
    double norm = std::sqrt(sq);
    std::vector<double> out(v.size());
    for (size_t i = 0; i < v.size(); ++i)
        out[i] = v[i] / norm;
    return out;
}

double dot(const std::vector<double>& a, const std::vector<double>& b)
{
    double s = 0.0;
    for (size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

} // namespace

std::vector<OracleHit> retrieval_oracle(const std::vector<OracleRecord>& records,
                                        const std::vector<double>& vis_q,
                                        const std::vector<double>& txt_q, int coarse_k,
                                        int final_n)
{
    std::vector<double> vq = unit(vis_q);
    std::vector<double> tq = unit(txt_q);
    std::vector<OracleHit> hits;
    hits.reserve(records.size());
    for (const auto& rec : records)
        hits.push_back({ rec.id, dot(vq, unit(rec.vis)), dot(tq, unit(rec.txt)) });

    std::sort(hits.begin(), hits.end(), [](const OracleHit& x, const OracleHit& y) {
        if (x.vis_score != y.vis_score)
            return x.vis_score > y.vis_score;
        return x.id < y.id;
    });
    if (hits.size() > static_cast<size_t>(coarse_k))
        hits.resize(static_cast<size_t>(coarse_k));
    std::sort(hits.begin(), hits.end(), [](const OracleHit& x, const OracleHit& y) {
        if (x.txt_score != y.txt_score)
            return x.txt_score > y.txt_score;
        return x.id < y.id;
    });
    if (hits.size() > static_cast<size_t>(final_n))
        hits.resize(static_cast<size_t>(final_n));
    return hits;
}

std::map<std::string, double> color_fractions(const img::Image& image)
{
    std::map<std::string, double> counts;
    size_t total = 0;
    for (int y = 0; y < image.height; ++y)
        for (int x = 0; x < image.width; ++x) {
            const uint8_t* p = image.px(x, y);
            if (p[3] < 8)
                continue;
            char buf[8];
            std::snprintf(buf, sizeof buf, "#%02x%02x%02x", p[0], p[1], p[2]);
            counts[buf] += 1.0;
            ++total;
        }
    for (auto& [hex, c] : counts)
        c /= static_cast<double>(total);
    return counts;
}

} // namespace wf::test
