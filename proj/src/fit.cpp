#include "widgetforge/fit.hpp"

#include <cmath>
#include <limits>

#include "widgetforge/error.hpp"
#include "widgetforge/layout.hpp"

namespace wf::fit {

namespace {

constexpr int kDoublingCap = 32;
constexpr double kBracketPx = 1.0;  // stop once the bracket is narrower than a pixel
constexpr double kPsiSlack = 1e-12; // FP noise allowance in monotonicity checks

struct Search {
    const std::function<double(double)>& psi;
    int cap = 0;
    FitResult result {};
    double min_feasible = std::numeric_limits<double>::infinity();
    bool non_monotone = false;

    double eval(double w)
    {
        if (result.iterations >= cap)
            throw Error(ErrorCode::NoConvergence,
                        "iteration cap exhausted before a feasible width was pinned");
        double v = psi(w);
        ++result.iterations;
        result.trace.emplace_back(w, v);
        if (v <= 0.0) {
            min_feasible = std::min(min_feasible, w);
        } else if (w > min_feasible) {
            // An infeasible sample above a feasible one: feasibility is not
            // upward-closed here.
            non_monotone = true;
        }
        return v;
    }

    bool within_eps(double w, double v) const { return std::abs(v) < 1.0 / w; }

    FitResult finish(double w)
    {
        result.w_star = w;
        result.epsilon = 1.0 / w;
        return std::move(result);
    }
};

} // namespace

FitResult fit_search(const std::function<double(double)>& psi, double w_init, int cap)
{
    if (!(w_init > 0.0) || !std::isfinite(w_init))
        throw Error(ErrorCode::DegenerateViewport, "initial width must be positive finite");

    Search s { .psi = psi, .cap = cap };

    double w = w_init;
    double v = s.eval(w);

    double lo = 0.0; // largest known infeasible width (0 = none found)
    double hi = 0.0; // smallest known feasible width
    double psi_lo = std::numeric_limits<double>::infinity();
    double psi_hi = -std::numeric_limits<double>::infinity();

    if (v <= 0.0) {
        if (s.within_eps(w, v))
            return s.finish(w);
        hi = w;
        psi_hi = v;
        // Contract downward until infeasible or until sub-pixel widths.
        // Psi should rise as the viewport shrinks.
        double probe = w / 2.0;
        while (probe >= kBracketPx) {
            double pv = s.eval(probe);
            if (pv > 0.0) {
                lo = probe;
                psi_lo = pv;
                break;
            }
            hi = probe;
            psi_hi = pv;
            if (s.within_eps(probe, pv))
                return s.finish(probe);
            probe /= 2.0;
        }
    } else {
        lo = w;
        psi_lo = v;
        // Expand by doubling until feasible (cap 32 doublings). Psi should
        // fall as the viewport grows; a rise marks a non-monotone shape.
        int doublings = 0;
        double probe = w;
        double prev = v;
        while (true) {
            if (doublings++ >= kDoublingCap)
                throw Error(ErrorCode::NoConvergence, "no feasible width within the doubling cap");
            probe *= 2.0;
            double pv = s.eval(probe);
            if (pv > prev + kPsiSlack)
                s.non_monotone = true;
            if (pv <= 0.0) {
                hi = probe;
                psi_hi = pv;
                break;
            }
            lo = probe;
            psi_lo = pv;
            prev = pv;
        }
    }

    // Bisect [lo, hi]. The epsilon exit is taken on the feasible side only,
    // so the result stays within a pixel of the true minimum even when psi
    // jumps across the boundary. A monotone psi keeps every interior sample
    // inside [psi(hi), psi(lo)].
    while (!s.non_monotone && hi - lo >= kBracketPx) {
        double mid = 0.5 * (lo + hi);
        double mv = s.eval(mid);
        if (mv > psi_lo + kPsiSlack || mv < psi_hi - kPsiSlack)
            s.non_monotone = true;
        if (mv <= 0.0) {
            hi = mid;
            psi_hi = mv;
            if (!s.non_monotone && s.within_eps(mid, mv))
                break;
        } else {
            lo = mid;
            psi_lo = mv;
        }
    }

    if (s.non_monotone && hi > lo) {
        // Fall back to a linear scan of the bracket at one-pixel resolution;
        // take the first feasible width.
        double found = hi;
        for (double x = std::max(kBracketPx, std::floor(lo)); x <= hi + 0.5; x += 1.0) {
            if (s.eval(x) <= 0.0) {
                found = x;
                break;
            }
        }
        hi = found;
    }

    return s.finish(hi);
}

FitResult fit_width(const dsl::WidgetSpec& spec, double aspect, double w_init, int cap)
{
    if (!(aspect > 0.0) || !std::isfinite(aspect))
        throw Error(ErrorCode::DegenerateViewport, "aspect ratio must be positive finite");

    auto psi = [&](double w) {
        layout::LayoutTree tree = layout::solve_layout(spec, w, w / aspect);
        return layout::violation(layout::layout_report(tree));
    };

    double start = w_init > 0.0 ? w_init : std::max(layout::natural_width(spec), kBracketPx);
    FitResult r = fit_search(psi, start, cap);
    r.aspect = aspect;
    r.h_star = r.w_star / aspect;
    return r;
}

Scale finalize_render_size(const FitResult& fit, double target_w, double target_h)
{
    if (!(target_w > 0.0) || !(target_h > 0.0))
        throw Error(ErrorCode::BadParameter, "target dimensions must be positive");
    if (!(fit.w_star > 0.0) || !(fit.h_star > 0.0))
        throw Error(ErrorCode::BadParameter, "fit result carries no usable size");
    return Scale { target_w / fit.w_star, target_h / fit.h_star };
}

} // namespace wf::fit
