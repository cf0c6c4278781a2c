#pragma once

#include <functional>

namespace symalg {

/// Adaptive Simpson integration of f over [a, b] with absolute error
/// target tol. Interval bisection with the standard Richardson error
/// estimate |S2 - S1| / 15; depth is capped so that at most max_intervals
/// subintervals are produced. Throws QuadratureError when the target
/// cannot be met within the cap.
double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double tol,
                        unsigned long max_intervals = 1ul << 20);

}  // namespace symalg
