#pragma once

#include <functional>

namespace dirosc {

// Adaptive Simpson quadrature on [a, b].  Recursion bisects until the
// Richardson estimate of the local error is below tol (distributed over
// subintervals) or max_depth is reached.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-10, int max_depth = 50);

} // namespace dirosc
