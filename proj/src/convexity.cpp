#include "hfi/convexity.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "hfi/errors.hpp"

namespace hfi {

ConvexityVerdict check_alpha_m_ga(const FunctionSpec& g, double alpha, double m, double lo,
                                  double hi, int n, double tol) {
    if (!(lo > 0.0) || !(lo < hi)) throw DomainError("check_alpha_m_ga: need 0 < lo < hi");
    if (!(alpha > 0.0 && alpha <= 1.0) || !(m > 0.0 && m <= 1.0))
        throw DomainError("check_alpha_m_ga: need alpha, m in (0, 1]");
    if (n < 8) throw DomainError("check_alpha_m_ga: need n >= 8");

    // Points x^t y^(m(1-t)) have ln-coordinates t ln x + m(1-t) ln y, so the
    // evaluated hull is [min(lo, lo^m), max(hi, hi^m)].
    const double hull_lo = std::min(lo, std::pow(lo, m));
    const double hull_hi = std::max(hi, std::pow(hi, m));
    if (hull_lo < g.domain_lo || hull_hi > g.domain_hi)
        throw DomainError("check_alpha_m_ga: evaluation hull [" + std::to_string(hull_lo) + ", " +
                          std::to_string(hull_hi) + "] exits the domain of " + g.name);

    std::vector<double> lnu(n), gu(n);
    const double llo = std::log(lo), lhi = std::log(hi);
    for (int i = 0; i < n; ++i) {
        lnu[i] = llo + (lhi - llo) * i / (n - 1);
        gu[i] = g.f(std::exp(lnu[i]));
    }

    double worst = -INFINITY;
    std::array<double, 3> worst_pt{0, 0, 0};
    for (int k = 0; k < n; ++k) {
        const double t = static_cast<double>(k) / (n - 1);
        const double ta = std::pow(t, alpha);
        const double w_y = m * (1.0 - ta);
        const double c1 = t, c2 = m * (1.0 - t);
        for (int i = 0; i < n; ++i) {
            const double base = c1 * lnu[i];
            const double rx = ta * gu[i];
            for (int j = 0; j < n; ++j) {
                const double lhs = g.f(std::exp(base + c2 * lnu[j]));
                const double viol = lhs - (rx + w_y * gu[j]);
                if (viol > worst) {
                    worst = viol;
                    worst_pt = {std::exp(lnu[i]), std::exp(lnu[j]), t};
                }
            }
        }
    }

    ConvexityVerdict v;
    v.grid_density = n;
    v.certified = worst <= tol;
    v.worst_violation = v.certified ? std::max(0.0, worst) : worst;
    if (worst > 0.0) v.witness = worst_pt;
    return v;
}

}  // namespace hfi
