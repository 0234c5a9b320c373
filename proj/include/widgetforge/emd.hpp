#pragma once

#include <vector>

namespace wf::emd {

// First Wasserstein distance between two histograms over the same integer
// bins, in bin-width units. Inputs are normalized to unit mass first; a
// histogram with no mass is treated as matching (distance 0).
double wasserstein1(const std::vector<double>& a, const std::vector<double>& b);

} // namespace wf::emd
