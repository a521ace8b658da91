#pragma once

#include <functional>

namespace bsim {

// Brent's method on [a, b]; f(a) and f(b) must bracket a root.
// Throws Error(convergence) if the bracket is invalid or the iteration
// budget is exhausted.
double brent(const std::function<double(double)>& f, double a, double b,
             double xtol, int max_iter = 200);

}  // namespace bsim
