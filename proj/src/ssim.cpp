#include "widgetforge/ssim.hpp"

#include <array>
#include <cmath>
#include <cstddef>

namespace wf::ssim {

namespace {

constexpr int kWindow = 11;
constexpr int kHalf = kWindow / 2;
constexpr double kSigma = 1.5;
constexpr double kC1 = 0.01 * 0.01;
constexpr double kC2 = 0.03 * 0.03;

std::array<double, kWindow> gaussian_kernel()
{
    std::array<double, kWindow> k {};
    double sum = 0.0;
    for (int i = 0; i < kWindow; ++i) {
        double d = i - kHalf;
        k[i] = std::exp(-d * d / (2.0 * kSigma * kSigma));
        sum += k[i];
    }
    for (double& v : k)
        v /= sum;
    return k;
}

// Separable filter with zero padding; only fully-covered centers are read.
std::vector<double> filter(const std::vector<double>& src, int w, int h,
                           const std::array<double, kWindow>& k)
{
    std::vector<double> tmp(src.size(), 0.0);
    for (int y = 0; y < h; ++y)
        for (int x = kHalf; x < w - kHalf; ++x) {
            double acc = 0.0;
            for (int i = 0; i < kWindow; ++i)
                acc += k[i] * src[static_cast<size_t>(y) * w + x - kHalf + i];
            tmp[static_cast<size_t>(y) * w + x] = acc;
        }
    std::vector<double> out(src.size(), 0.0);
    for (int y = kHalf; y < h - kHalf; ++y)
        for (int x = kHalf; x < w - kHalf; ++x) {
            double acc = 0.0;
            for (int i = 0; i < kWindow; ++i)
                acc += k[i] * tmp[static_cast<size_t>(y - kHalf + i) * w + x];
            out[static_cast<size_t>(y) * w + x] = acc;
        }
    return out;
}

double ssim_term(double mu_a, double mu_b, double raw_aa, double raw_bb, double raw_ab)
{
    double var_a = raw_aa - mu_a * mu_a;
    double var_b = raw_bb - mu_b * mu_b;
    double cov = raw_ab - mu_a * mu_b;
    double num = (2.0 * mu_a * mu_b + kC1) * (2.0 * cov + kC2);
    double den = (mu_a * mu_a + mu_b * mu_b + kC1) * (var_a + var_b + kC2);
    return num / den;
}

double global_ssim(const std::vector<double>& a, const std::vector<double>& b)
{
    double n = static_cast<double>(a.size());
    double mu_a = 0.0;
    double mu_b = 0.0;
    double raw_aa = 0.0;
    double raw_bb = 0.0;
    double raw_ab = 0.0;
    for (size_t i = 0; i < a.size(); ++i) {
        mu_a += a[i];
        mu_b += b[i];
        raw_aa += a[i] * a[i];
        raw_bb += b[i] * b[i];
        raw_ab += a[i] * b[i];
    }
    mu_a /= n;
    mu_b /= n;
    raw_aa /= n;
    raw_bb /= n;
    raw_ab /= n;
    return ssim_term(mu_a, mu_b, raw_aa, raw_bb, raw_ab);
}

} // namespace

double mean_ssim(const std::vector<double>& a, const std::vector<double>& b, int width, int height)
{
    if (width <= 0 || height <= 0 || a.size() != b.size())
        return 0.0;
    if (width < kWindow || height < kWindow)
        return global_ssim(a, b);

    static const std::array<double, kWindow> kernel = gaussian_kernel();

    size_t n = a.size();
    std::vector<double> aa(n), bb(n), ab(n);
    for (size_t i = 0; i < n; ++i) {
        aa[i] = a[i] * a[i];
        bb[i] = b[i] * b[i];
        ab[i] = a[i] * b[i];
    }

    std::vector<double> mu_a = filter(a, width, height, kernel);
    std::vector<double> mu_b = filter(b, width, height, kernel);
    std::vector<double> raw_aa = filter(aa, width, height, kernel);
    std::vector<double> raw_bb = filter(bb, width, height, kernel);
    std::vector<double> raw_ab = filter(ab, width, height, kernel);

    double sum = 0.0;
    long long count = 0;
    for (int y = kHalf; y < height - kHalf; ++y)
        for (int x = kHalf; x < width - kHalf; ++x) {
            size_t i = static_cast<size_t>(y) * width + x;
            sum += ssim_term(mu_a[i], mu_b[i], raw_aa[i], raw_bb[i], raw_ab[i]);
            ++count;
        }
    return count > 0 ? sum / static_cast<double>(count) : global_ssim(a, b);
}

} // namespace wf::ssim
