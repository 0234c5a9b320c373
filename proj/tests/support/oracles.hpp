#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "widgetforge/image.hpp"

namespace wf::test {

// Transport-plan W1: moves mass greedily between the two normalized
// histograms, summing flow * distance. Optimal in 1D, independent of the
// prefix-sum formulation under test.
double emd_transport(const std::vector<double>& a, const std::vector<double>& b);

// Windowed SSIM computed per window with explicit two-pass statistics.
double ssim_direct(const std::vector<float>& a, const std::vector<float>& b, int width,
                   int height);

// First integer width with psi(w) <= 0, scanning 1..max_w. Returns 0 when
// none exists.
double brute_min_feasible(const std::function<double(double)>& psi, double max_w);

struct OracleRecord {
    std::string id;
    std::vector<double> vis;
    std::vector<double> txt;
};

struct OracleHit {
    std::string id;
    double vis_score;
    double txt_score;
};

// Full-sort two-stage ranking over raw (unnormalized) records and queries.
std::vector<OracleHit> retrieval_oracle(const std::vector<OracleRecord>& records,
                                        const std::vector<double>& vis_q,
                                        const std::vector<double>& txt_q, int coarse_k,
                                        int final_n);

// Exact per-color pixel fractions over opaque pixels (alpha >= 8).
std::map<std::string, double> color_fractions(const img::Image& image);

} // namespace wf::test
