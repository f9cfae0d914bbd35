#include "noma/errors.hpp"
#include "noma/laplace.hpp"
#include "noma/quadrature.hpp"
#include "noma/rng.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace noma;

TEST_SUITE("laplace") {

TEST_CASE("quadrature driver")
{
    const QuadratureResult r = integrate_adaptive([](double x) { return std::sin(x); }, 0.0, std::numbers::pi,
                                                  0.0, 1e-13);
    CHECK(r.converged);
    CHECK(r.value == doctest::Approx(2.0).epsilon(1e-13));
    const QuadratureResult t = integrate_power_tail([](double x) { return 1.0 / (x * x); }, 3.0, 2.0, 0.0, 1e-13);
    CHECK(t.value == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("closed form examples")
{
    const NodePolar o{0.0, 0.0};
    CHECK(laplace_closed(0.0, 1.0, 0.01, o, Road::X) == 1.0);
    CHECK(laplace_closed(1.0, 1.0, 0.0, o, Road::X) == 1.0);
    CHECK(laplace_closed(1.0, 1.0, 0.01, o, Road::X) == doctest::Approx(0.96907).epsilon(1e-5));
    CHECK(laplace_closed(1.0, 1.0, 0.01, o, Road::X) ==
          doctest::Approx(std::exp(-0.01 * std::numbers::pi)).epsilon(1e-15));
}

TEST_CASE("quadrature examples")
{
    const NodePolar o{0.0, 0.0};
    CHECK(laplace_quadrature(0.0, 1.0, 0.01, 4.0, o, Road::X) == 1.0);
    CHECK(laplace_quadrature(1.0, 1.0, 0.01, 2.0, o, Road::X) ==
          doctest::Approx(laplace_closed(1.0, 1.0, 0.01, o, Road::X)).epsilon(1e-6));
    const double a4 = laplace_quadrature(1.0, 1.0, 0.01, 4.0, o, Road::X);
    CHECK(a4 == doctest::Approx(std::exp(-0.01 * std::numbers::pi / std::numbers::sqrt2)).epsilon(1e-12));
    CHECK(a4 == doctest::Approx(0.97803).epsilon(1e-5));
    CHECK(laplace_exponent_integral(1.0, 4.0, 0.0) ==
          doctest::Approx(std::numbers::pi * std::numbers::sqrt2 / 2.0).epsilon(1e-8));
    CHECK_THROWS_AS(laplace_quadrature(1.0, 1.0, 0.01, 1.0, o, Road::X), ValidationError);
}

TEST_CASE("closed form against quadrature on a grid")
{
    CounterRng rng = CounterRng::from_seed(21);
    for (int i = 0; i < 50; ++i) {
        const double s = std::pow(10.0, -2.0 + 10.0 * rng.uniform());
        const NodePolar n{300.0 * rng.uniform(), 2.0 * std::numbers::pi * rng.uniform()};
        const Road road = i % 2 == 0 ? Road::X : Road::Y;
        const double c = laplace_closed(s, 0.5, 1e-3, n, road);
        const double q = laplace_quadrature(s, 0.5, 1e-3, 2.0, n, road);
        CHECK(std::abs(q - c) <= 1e-6 * c);
    }
}

TEST_CASE("bounds and monotonicity")
{
    const NodePolar n = to_polar({100.0, 10.0});
    for (double alpha : {2.0, 3.0, 4.0}) {
        double prev_s = 1.0;
        for (int i = 1; i <= 100; ++i) {
            const double s = std::pow(10.0, -1.0 + 8.0 * i / 100.0);
            const double v = laplace_quadrature(s, 0.5, 1e-3, alpha, n, Road::X);
            CHECK(v > 0.0);
            CHECK(v <= 1.0);
            CHECK(v < prev_s);
            prev_s = v;
        }
        double prev_l = 1.0;
        double prev_p = 1.0;
        for (int i = 1; i <= 20; ++i) {
            const double vl = laplace_quadrature(1e5, 0.5, 1e-4 * i, alpha, n, Road::Y);
            const double vp = laplace_quadrature(1e5, 0.05 * i, 1e-3, alpha, n, Road::Y);
            CHECK(vl < prev_l);
            CHECK(vp < prev_p);
            prev_l = vl;
            prev_p = vp;
        }
    }
}

TEST_CASE("taylor coefficients")
{
    const NodePolar n = to_polar({100.0, -10.0});
    // order 0 is the plain value
    CHECK(laplace_taylor(0, 3e4, 0.5, 1e-3, 2.0, n, Road::X).value() ==
          doctest::Approx(laplace_closed(3e4, 0.5, 1e-3, n, Road::X)).epsilon(1e-15));
    CHECK(laplace_taylor(0, 3e4, 0.5, 1e-3, 4.0, n, Road::Y).value() ==
          doctest::Approx(laplace_quadrature(3e4, 0.5, 1e-3, 4.0, n, Road::Y)).epsilon(1e-12));
    // first order against the bracket form, which is exact there
    for (double s : {1.0, 1e2, 1e4, 1e6}) {
        const double t = laplace_taylor(1, s, 0.5, 1e-3, 2.0, n, Road::Y).derivative(1);
        const double b = laplace_derivative_bracket_form(1, s, 0.5, 1e-3, n, Road::Y);
        CHECK(std::abs(t - b) <= 1e-10 * std::abs(b));
    }
    // the bracket form is not the second derivative
    const double t2 = laplace_taylor(2, 1e4, 0.5, 1e-3, 2.0, n, Road::X).derivative(2);
    const double b2 = laplace_derivative_bracket_form(2, 1e4, 0.5, 1e-3, n, Road::X);
    CHECK(std::abs(t2 - b2) > 1e-6 * std::abs(t2));
}

TEST_CASE("general-alpha coefficients agree with the alpha=2 closed form")
{
    // the integral route at alpha = 2 must reproduce Taylor algebra on the closed form
    const NodePolar n = to_polar({60.0, 25.0});
    for (double s : {10.0, 1e3, 1e5}) {
        const TaylorScalar closed = laplace_taylor(4, s, 0.5, 2e-3, 2.0, n, Road::X);
        const TaylorScalar integral = laplace_taylor(4, s, 0.5, 2e-3, 2.0 + 1e-15, n, Road::X);
        for (std::size_t k = 0; k <= 4; ++k) {
            CHECK(integral[k] == doctest::Approx(closed[k]).epsilon(1e-8));
        }
    }
}

TEST_CASE("first derivative against central differences")
{
    const NodePolar n = to_polar({100.0, 10.0});
    for (double s : {1e2, 1e4, 1e6}) {
        const double h = 1e-5 * s;
        const double fd = (laplace_closed(s + h, 0.5, 1e-3, n, Road::Y) - laplace_closed(s - h, 0.5, 1e-3, n, Road::Y)) /
                          (2 * h);
        const double t = laplace_taylor(1, s, 0.5, 1e-3, 2.0, n, Road::Y).derivative(1);
        CHECK(std::abs(t - fd) <= 1e-5 * std::abs(t));
    }
}

}
