#pragma once

#include "noma/channel.hpp"
#include "noma/geometry.hpp"
#include "noma/taylor.hpp"

#include <array>
#include <cstddef>

namespace noma {

// Laplace transforms of the interference from one road at a receiver, for unit
// transmit power and unit link-budget constant:
//   L(s) = exp(-p*lambda * Int_R 1 / (1 + |x - M|^alpha / s) dx).

/// Closed form for alpha = 2.
double laplace_closed(double s, double p, double lambda, NodePolar n, Road road);

/// Numerical evaluation of the exponent integral for any alpha > 1.
double laplace_quadrature(double s, double p, double lambda, double alpha, NodePolar n, Road road);

/// Int_R 1 / (1 + |x - M|^alpha / s) dx, absolute error <= abs_tol.
double laplace_exponent_integral(double s, double alpha, double offset, double abs_tol = 1e-12);

/// Taylor coefficients in s of L up to `order`. Uses the closed form under
/// Taylor arithmetic when alpha == 2 and differentiates under the integral
/// sign otherwise. Orders >= 1 require s > 0.
TaylorScalar laplace_taylor(std::size_t order, double s, double p, double lambda, double alpha, NodePolar n,
                            Road road);

/// The alpha = 2 derivative written as [dE/ds]^order * L(s), E the exponent.
/// Exact at order 1 only; kept for comparison with the Taylor route.
double laplace_derivative_bracket_form(std::size_t order, double s, double p, double lambda, NodePolar n,
                                       Road road);

/// One interferer process seen by a receiver.
struct InterferenceComponent {
    Road road = Road::X;
    LinkClass klass = LinkClass::LOS;
    double p = 1.0;
    double lambda = 0.0;
    double alpha = 2.0;
};

/// Everything that determines the interference distribution at one receiver.
struct InterferenceEnv {
    NodePolar receiver;
    double upsilon = 1.0;  ///< scales every interferer's received power
    std::array<InterferenceComponent, 4> components;  ///< X-LOS, X-NLOS, Y-LOS, Y-NLOS

    /// Taylor expansion in w of E[exp(-w * I_c)] for one component, where
    /// I_c includes the upsilon factor.
    TaylorScalar component_taylor(std::size_t index, std::size_t order, double w) const;
};

}  // namespace noma
