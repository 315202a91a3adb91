#pragma once

#include <array>
#include <optional>

#include "hfi/functions.hpp"

namespace hfi {

struct ConvexityVerdict {
    bool certified = false;
    // max over the grid of LHS - RHS, clamped at 0 when certified.
    double worst_violation = 0.0;
    std::optional<std::array<double, 3>> witness;  // (x, y, t) of worst point
    int grid_density = 0;
};

// Grid certification of g(x^t y^(m(1-t))) <= t^alpha g(x) + m (1 - t^alpha) g(y)
// for x, y in [lo, hi] (geometric spacing) and t in [0, 1] including both
// endpoints, on an n*n*n grid. Certified iff LHS <= RHS + tol everywhere.
// The evaluated points span the hull [min(lo, lo^m), max(hi, hi^m)], which
// must lie inside g's domain; otherwise DomainError.
ConvexityVerdict check_alpha_m_ga(const FunctionSpec& g, double alpha, double m, double lo,
                                  double hi, int n = 32, double tol = 1e-9);

}  // namespace hfi
