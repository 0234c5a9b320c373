#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "widgetforge/dsl.hpp"

namespace wf::fit {

struct FitResult {
    double w_star { 0.0 };
    double h_star { 0.0 };
    double aspect { 1.0 };
    double epsilon { 0.0 }; // 1/w_star, the tolerance at the returned width
    int iterations { 0 };   // layout evaluations consumed
    std::vector<std::pair<double, double>> trace; // (w, psi) per evaluation
};

struct Scale {
    double sx { 1.0 };
    double sy { 1.0 };
};

// Width search over an arbitrary violation function. Exposed so the
// bracketing/bisection logic can be driven with synthetic psi shapes.
FitResult fit_search(const std::function<double(double)>& psi, double w_init, int cap = 64);

// Smallest feasible width under psi(w) = violation at viewport (w, w/aspect).
// w_init <= 0 selects the natural layout width. Throws
// Error{DegenerateViewport|NoConvergence}.
FitResult fit_width(const dsl::WidgetSpec& spec, double aspect, double w_init = 0.0, int cap = 64);

// Per-axis scale mapping the fitted layout onto the requested output size.
Scale finalize_render_size(const FitResult& fit, double target_w, double target_h);

} // namespace wf::fit
