#include "widgetforge/emd.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

namespace wf::emd {

double wasserstein1(const std::vector<double>& a, const std::vector<double>& b)
{
    size_t n = std::max(a.size(), b.size());
    double total_a = 0.0;
    double total_b = 0.0;
    for (double v : a)
        total_a += std::max(v, 0.0);
    for (double v : b)
        total_b += std::max(v, 0.0);
    if (total_a <= 0.0 || total_b <= 0.0)
        return 0.0;

    double cum_a = 0.0;
    double cum_b = 0.0;
    double w1 = 0.0;
    for (size_t i = 0; i < n; ++i) {
        if (i < a.size())
            cum_a += std::max(a[i], 0.0) / total_a;
        if (i < b.size())
            cum_b += std::max(b[i], 0.0) / total_b;
        w1 += std::abs(cum_a - cum_b);
    }
    return w1;
}

} // namespace wf::emd
