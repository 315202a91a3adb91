#include "hfi/quadrature.hpp"

namespace hfi {

QuadResult integrate(const std::function<double(double)>& f, double lo, double hi,
                     const QuadratureConfig& cfg) {
    return integrate_fn(f, lo, hi, cfg);
}

}  // namespace hfi
