#pragma once

#include <functional>

namespace noma {

struct QuadratureResult {
    double value = 0.0;
    double abs_error = 0.0;
    int intervals = 0;
    bool converged = false;
};

/// Globally adaptive Gauss-Kronrod (21-point) on [a, b]: the interval with
/// the largest error estimate is bisected until the total estimate drops
/// below max(abs_tol, rel_tol * |value|) or `max_intervals` is reached.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b, double abs_tol,
                                    double rel_tol, int max_intervals = 2000);

/// Integral over [a, inf) of a function that decays like u^-decay (decay > 1),
/// mapped to (0, 1] with u = a t^(-1/(decay-1)) so the integrand stays bounded
/// at t -> 0. Requires a > 0.
QuadratureResult integrate_power_tail(const std::function<double(double)>& f, double a, double decay,
                                      double abs_tol, double rel_tol, int max_intervals = 2000);

}  // namespace noma
