#pragma once

#include <vector>

namespace wf::ssim {

// Mean SSIM between two same-size luminance planes in [0, 1], using the
// standard 11x11 Gaussian window (sigma 1.5) and stabilizers C1 = 0.01^2,
// C2 = 0.03^2 for unit dynamic range. The mean is taken over window centers
// whose support lies fully inside the image; planes smaller than the window
// collapse to a single uniform-weight global window.
double mean_ssim(const std::vector<double>& a, const std::vector<double>& b, int width, int height);

} // namespace wf::ssim
