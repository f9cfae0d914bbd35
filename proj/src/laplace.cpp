#include "noma/laplace.hpp"

#include "noma/errors.hpp"

#include "noma/quadrature.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

namespace noma {

namespace {

constexpr double kRelTol = 1e-12;

double distance_power(double offset2, double u, double alpha)
{
    const double d2 = offset2 + u * u;
    if (alpha == 2.0) {
        return d2;
    }
    if (alpha == 4.0) {
        return d2 * d2;
    }
    return std::pow(d2, 0.5 * alpha);
}

void check_alpha(double alpha)
{
    if (!(alpha > 1.0) || !std::isfinite(alpha)) {
        throw ValidationError("alpha", "interference integral diverges for alpha <= 1");
    }
}

// Twice the integral of f over [0, inf): adaptive on [0, 4 scale], then the
// power-law tail mapped onto (0, 1].
template <class F>
double integrate_symmetric(F f, double scale, double alpha, double abs_tol, const char* what)
{
    const double split = 4.0 * scale;
    const QuadratureResult core = integrate_adaptive(f, 0.0, split, 0.25 * abs_tol, kRelTol);
    const QuadratureResult tail = integrate_power_tail(f, split, alpha, 0.25 * abs_tol, kRelTol);
    const double total = 2.0 * (core.value + tail.value);
    const double err = 2.0 * (core.abs_error + tail.abs_error);
    if (!std::isfinite(total) || err > std::max(abs_tol, 1e-10 * std::abs(total))) {
        std::ostringstream msg;
        msg << "quadrature did not converge for " << what << " (integral " << total << ", error estimate " << err
            << ")";
        throw NumericalError(msg.str());
    }
    return total;
}

double length_scale(double s, double alpha, double offset)
{
    return std::max({offset, std::pow(s, 1.0 / alpha), 1e-3});
}

}  // namespace

double laplace_closed(double s, double p, double lambda, NodePolar n, Road road)
{
    if (s == 0.0 || lambda == 0.0 || p == 0.0) {
        return 1.0;
    }
    const double h = offset_from_road(n, road);
    return std::exp(-p * lambda * s * std::numbers::pi / std::sqrt(h * h + s));
}

double laplace_exponent_integral(double s, double alpha, double offset, double abs_tol)
{
    check_alpha(alpha);
    if (s == 0.0) {
        return 0.0;
    }
    const double offset2 = offset * offset;
    auto f = [&](double u) {
        const double q = 1.0 / (s + distance_power(offset2, u, alpha));
        return s * q;
    };
    return integrate_symmetric(f, length_scale(s, alpha, offset), alpha, abs_tol, "Laplace exponent");
}

double laplace_quadrature(double s, double p, double lambda, double alpha, NodePolar n, Road road)
{
    check_alpha(alpha);
    if (!(s >= 0.0)) {
        throw ValidationError("s", "Laplace argument must be >= 0");
    }
    if (s == 0.0 || lambda == 0.0 || p == 0.0) {
        return 1.0;
    }
    const double weight = p * lambda;
    const double integral = laplace_exponent_integral(s, alpha, offset_from_road(n, road), 1e-10 / weight);
    return std::exp(-weight * integral);
}

TaylorScalar laplace_taylor(std::size_t order, double s, double p, double lambda, double alpha, NodePolar n,
                            Road road)
{
    check_alpha(alpha);
    if (!(s >= 0.0) || (order > 0 && !(s > 0.0))) {
        throw ValidationError("s", "derivatives of the Laplace transform need s > 0");
    }
    if (lambda == 0.0 || p == 0.0) {
        return TaylorScalar::constant(order, 1.0);
    }
    const double weight = p * lambda;
    const double h = offset_from_road(n, road);

    if (alpha == 2.0) {
        const TaylorScalar var = TaylorScalar::variable(order, s);
        return exp(-weight * std::numbers::pi * var / sqrt(var + h * h));
    }

    // d^k/ds^k of s/(s+D) is (-1)^(k+1) k! D/(s+D)^(k+1), so the Taylor
    // coefficient of the exponent is an integral of D/(s+D)^(k+1).
    std::vector<double> exponent(order + 1);
    exponent[0] = -weight * laplace_exponent_integral(s, alpha, h, 1e-10 / weight);
    const double h2 = h * h;
    const double scale = length_scale(s, alpha, h);
    for (std::size_t k = 1; k <= order; ++k) {
        auto f = [&](double u) {
            const double q = 1.0 / (s + distance_power(h2, u, alpha));
            const double w = 1.0 - s * q;
            return w * std::pow(q, static_cast<double>(k));
        };
        const double integral = integrate_symmetric(f, scale, alpha, 0.0, "Laplace derivative");
        const double sign = (k % 2 == 1) ? 1.0 : -1.0;
        exponent[k] = -weight * sign * integral;
    }
    return exp(TaylorScalar::from_coefficients(std::move(exponent)));
}

double laplace_derivative_bracket_form(std::size_t order, double s, double p, double lambda, NodePolar n,
                                       Road road)
{
    const double h2 = std::pow(offset_from_road(n, road), 2);
    const double c = p * lambda * std::numbers::pi;
    const double bracket = -c / std::sqrt(h2 + s) + 0.5 * c * s / std::pow(h2 + s, 1.5);
    return std::pow(bracket, static_cast<double>(order)) * laplace_closed(s, p, lambda, n, road);
}

TaylorScalar InterferenceEnv::component_taylor(std::size_t index, std::size_t order, double w) const
{
    const InterferenceComponent& c = components.at(index);
    TaylorScalar t = laplace_taylor(order, upsilon * w, c.p, c.lambda, c.alpha, receiver, c.road);
    // chain rule for s = upsilon * w
    double scale = 1.0;
    for (std::size_t k = 1; k <= order; ++k) {
        scale *= upsilon;
        t[k] *= scale;
    }
    return t;
}

}  // namespace noma
