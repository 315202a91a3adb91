#include "hfi/hadamard.hpp"

namespace hfi {

double hadamard_left(const FunctionSpec& f, double a, double x, double theta,
                     const QuadratureConfig& cfg) {
    return hadamard_left_fn(f.f, a, x, theta, cfg);
}

double hadamard_right(const FunctionSpec& f, double x, double b, double theta,
                      const QuadratureConfig& cfg) {
    return hadamard_right_fn(f.f, x, b, theta, cfg);
}

}  // namespace hfi
