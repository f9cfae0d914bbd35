#include "noma/taylor.hpp"

#include <doctest.h>

#include <cmath>

using namespace noma;

TEST_SUITE("taylor") {

TEST_CASE("variable and constants")
{
    const TaylorScalar x = TaylorScalar::variable(3, 2.0);
    CHECK(x.value() == 2.0);
    CHECK(x[1] == 1.0);
    CHECK(x[2] == 0.0);
    CHECK(TaylorScalar::constant(2, 5.0).derivative(1) == 0.0);
}

TEST_CASE("products and quotients of polynomials")
{
    const TaylorScalar x = TaylorScalar::variable(4, 1.5);
    const TaylorScalar p = x * x * x;  // x^3
    CHECK(p.derivative(0) == doctest::Approx(3.375));
    CHECK(p.derivative(1) == doctest::Approx(3 * 1.5 * 1.5));
    CHECK(p.derivative(2) == doctest::Approx(6 * 1.5));
    CHECK(p.derivative(3) == doctest::Approx(6.0));
    CHECK(p.derivative(4) == doctest::Approx(0.0));
    const TaylorScalar q = p / x;
    CHECK(q.derivative(1) == doctest::Approx(3.0));
    CHECK(q.derivative(2) == doctest::Approx(2.0));
}

TEST_CASE("elementary functions against closed-form derivatives")
{
    const double a = 0.7;
    const TaylorScalar x = TaylorScalar::variable(5, a);
    const TaylorScalar e = exp(2.0 * x);
    for (std::size_t k = 0; k <= 5; ++k) {
        CHECK(e.derivative(k) == doctest::Approx(std::pow(2.0, k) * std::exp(2.0 * a)).epsilon(1e-13));
    }
    const TaylorScalar l = log(x);
    CHECK(l.derivative(1) == doctest::Approx(1.0 / a));
    CHECK(l.derivative(3) == doctest::Approx(2.0 / (a * a * a)));
    const TaylorScalar s = sqrt(x);
    CHECK(s.derivative(2) == doctest::Approx(-0.25 * std::pow(a, -1.5)));
    const TaylorScalar pw = pow(x, -0.5);
    CHECK(pw.derivative(2) == doctest::Approx(0.75 * std::pow(a, -2.5)));
    const TaylorScalar r = reciprocal(x);
    CHECK(r.derivative(3) == doctest::Approx(-6.0 / std::pow(a, 4)));
}

TEST_CASE("composition matches central differences")
{
    auto f = [](double v) { return std::exp(-0.3 * v / std::sqrt(4.0 + v)); };
    for (double a : {0.1, 1.0, 7.5, 40.0}) {
        const TaylorScalar x = TaylorScalar::variable(2, a);
        const TaylorScalar t = exp(-0.3 * x / sqrt(4.0 + x));
        const double h = 1e-4 * std::max(1.0, a);
        const double d1 = (f(a + h) - f(a - h)) / (2 * h);
        const double d2 = (f(a + h) - 2 * f(a) + f(a - h)) / (h * h);
        CHECK(t.value() == doctest::Approx(f(a)).epsilon(1e-15));
        CHECK(t.derivative(1) == doctest::Approx(d1).epsilon(1e-7));
        CHECK(t.derivative(2) == doctest::Approx(d2).epsilon(1e-4));
    }
}

TEST_CASE("identities")
{
    const TaylorScalar x = TaylorScalar::variable(6, 1.3);
    const TaylorScalar id = log(exp(x));
    const TaylorScalar sq = sqrt(x) * sqrt(x);
    for (std::size_t k = 0; k <= 6; ++k) {
        CHECK(id[k] == doctest::Approx(x[k]).epsilon(1e-13));
        CHECK(sq[k] == doctest::Approx(x[k]).epsilon(1e-13));
    }
}

TEST_CASE("order mismatch is rejected")
{
    const TaylorScalar a(2, 1.0);
    const TaylorScalar b(3, 1.0);
    CHECK_THROWS(a + b);
}

}
