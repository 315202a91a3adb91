#pragma once

#include <cmath>
#include <functional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "hfi/errors.hpp"

namespace hfi {

struct QuadratureConfig {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    int max_subdivisions = 2000;
};

struct QuadResult {
    double value;
    double est_error;       // >= 0
    int subdivisions_used;  // <= cfg.max_subdivisions
};

namespace detail {

// 15-point Kronrod nodes (positive half) with embedded 7-point Gauss rule.
// Odd-indexed nodes are the Gauss points.
inline constexpr double gk_nodes[8] = {
    0.9914553711208126392068546975263285,
    0.9491079123427585245261896840478513,
    0.8648644233597690727897127886409262,
    0.7415311855993944398638647732807884,
    0.5860872354676911302941448382587296,
    0.4058451513773971669066064120769615,
    0.2077849550078984676006894037732449,
    0.0,
};
inline constexpr double gk_weights_k[8] = {
    2.293532201052922496373200805896959e-2,
    6.309209262997855329070066318920429e-2,
    1.047900103222501838398763225415180e-1,
    1.406532597155259187451895905102379e-1,
    1.690047266392679028265834265985503e-1,
    1.903505780647854099132564024210137e-1,
    2.044329400752988924141619992346491e-1,
    2.094821410847278280129991748917143e-1,
};
inline constexpr double gk_weights_g[4] = {
    0.1294849661688696932706114326790820,
    0.2797053914892766679014677714237796,
    0.3818300505051189449503697754889751,
    0.4179591836734693877551020408163265,
};

struct Panel {
    double lo, hi, value, error;
    bool operator<(const Panel& o) const { return error < o.error; }
};

// One Gauss-Kronrod pass over [lo, hi]; the rule is open, so endpoints are
// never sampled and integrable endpoint singularities are tolerated.
template <class F>
Panel gk15(F&& f, double lo, double hi) {
    const double c = 0.5 * (lo + hi);
    const double h = 0.5 * (hi - lo);
    double k = 0.0, g = 0.0;
    for (int i = 0; i < 8; ++i) {
        double fsum;
        if (i == 7) {
            fsum = f(c);
        } else {
            fsum = f(c - h * gk_nodes[i]) + f(c + h * gk_nodes[i]);
        }
        if (!std::isfinite(fsum))
            throw ConvergenceError("non-finite integrand value near t = " + std::to_string(c));
        k += gk_weights_k[i] * fsum;
        if (i % 2 == 1) g += gk_weights_g[i / 2] * fsum;
    }
    k *= h;
    g *= h;
    return Panel{lo, hi, k, std::fabs(k - g)};
}

}  // namespace detail

// Globally adaptive integration: bisect the panel with the largest error
// estimate until the summed estimate meets max(abs_tol, rel_tol * |value|).
template <class F>
QuadResult integrate_fn(F&& f, double lo, double hi, const QuadratureConfig& cfg = {}) {
    if (!(lo <= hi)) throw DomainError("integrate: lo > hi");
    if (lo == hi) return QuadResult{0.0, 0.0, 0};

    std::priority_queue<detail::Panel> heap;
    detail::Panel first = detail::gk15(f, lo, hi);
    double total = first.value;
    double err = first.error;
    heap.push(first);

    int used = 0;
    while (err > std::max(cfg.abs_tol, cfg.rel_tol * std::fabs(total))) {
        if (used >= cfg.max_subdivisions)
            throw ConvergenceError("integrate: tolerance unmet after " +
                                   std::to_string(used) + " subdivisions (est_error " +
                                   std::to_string(err) + ")");
        detail::Panel worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.lo + worst.hi);
        if (mid <= worst.lo || mid >= worst.hi) {
            // Panel at floating-point resolution; its error estimate cannot
            // improve. Accept its value as-is and keep refining the rest.
            err -= worst.error;
            if (heap.empty()) break;
            continue;
        }
        detail::Panel l = detail::gk15(f, worst.lo, mid);
        detail::Panel r = detail::gk15(f, mid, worst.hi);
        total += l.value + r.value - worst.value;
        err += l.error + r.error - worst.error;
        heap.push(l);
        heap.push(r);
        ++used;
    }
    return QuadResult{total, err, used};
}

QuadResult integrate(const std::function<double(double)>& f, double lo, double hi,
                     const QuadratureConfig& cfg = {});

}  // namespace hfi
