#include "noma/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <queue>
#include <vector>

namespace noma {

namespace {

using Rule = boost::math::quadrature::gauss_kronrod<double, 21>;

struct Segment {
    double a;
    double b;
    double value;
    double error;

    bool operator<(const Segment& o) const noexcept { return error < o.error; }
};

Segment apply_rule(const std::function<double(double)>& f, double a, double b)
{
    double err = 0.0;
    // depth 0: one Gauss-Kronrod pair, no internal refinement
    const double v = Rule::integrate(f, a, b, 0, 0.0, &err);
    return {a, b, v, err};
}

}  // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b, double abs_tol,
                                    double rel_tol, int max_intervals)
{
    std::priority_queue<Segment> heap;
    Segment first = apply_rule(f, a, b);
    double total = first.value;
    double error = first.error;
    heap.push(first);
    int intervals = 1;
    while (error > std::max(abs_tol, rel_tol * std::abs(total)) && intervals < max_intervals) {
        const Segment worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b)) {
            heap.push(worst);
            break;
        }
        const Segment left = apply_rule(f, worst.a, mid);
        const Segment right = apply_rule(f, mid, worst.b);
        total += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        ++intervals;
    }
    // re-sum to shed the drift of the running updates
    QuadratureResult out;
    out.intervals = intervals;
    while (!heap.empty()) {
        out.value += heap.top().value;
        out.abs_error += heap.top().error;
        heap.pop();
    }
    out.converged = std::isfinite(out.value) && out.abs_error <= std::max(abs_tol, rel_tol * std::abs(out.value));
    return out;
}

QuadratureResult integrate_power_tail(const std::function<double(double)>& f, double a, double decay,
                                      double abs_tol, double rel_tol, int max_intervals)
{
    const double p = 1.0 / (decay - 1.0);
    auto mapped = [&](double t) {
        const double u = a * std::pow(t, -p);
        const double v = f(u) * a * p * std::pow(t, -p - 1.0);
        return std::isfinite(v) ? v : 0.0;
    };
    return integrate_adaptive(mapped, 0.0, 1.0, abs_tol, rel_tol, max_intervals);
}

}  // namespace noma
