#include "noma/checks.hpp"

#include "noma/analytic.hpp"
#include "noma/channel.hpp"
#include "noma/experiments.hpp"
#include "noma/laplace.hpp"
#include "noma/montecarlo.hpp"
#include "noma/quadrature.hpp"
#include "noma/rng.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace noma::checks {

namespace {

double rel_err(double got, double want)
{
    if (got == want) {
        return 0.0;
    }
    return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

std::string fmt(double v)
{
    std::ostringstream s;
    s.precision(3);
    s << v;
    return s.str();
}

double log_uniform(CounterRng& rng, double lo, double hi)
{
    return lo * std::pow(hi / lo, rng.uniform());
}

}  // namespace

CheckResult analytic_vs_simulation(const CheckOptions& opt, bool use_paper_kernel)
{
    CheckResult r{"analytic vs simulation", true, {}};
    double worst = 0.0;
    int failures = 0;
    for (double lambda : {1e-4, 1e-3, 5e-3}) {
        for (Scheme scheme : {Scheme::NOMA, Scheme::OMA}) {
            ScenarioConfig cfg;
            cfg.ppp.set_common(lambda);
            const ComparisonRecord rec = compare(cfg, scheme, opt.trials, opt.seed, opt.workers);
            for (const EventComparison* e : {&rec.o1, &rec.o2}) {
                const double analytic = use_paper_kernel ? e->analytic_paper : e->analytic_exact;
                const double z = z_score(analytic, e->mc);
                worst = std::max(worst, std::abs(z));
                if (!(std::abs(z) <= 3.0)) {
                    ++failures;
                    r.passed = false;
                }
            }
        }
    }
    r.detail = "12 configs, max |z| = " + fmt(worst) + ", " + std::to_string(failures) + " beyond 3";
    return r;
}

CheckResult laplace_closed_vs_quadrature()
{
    CheckResult r{"laplace closed form vs quadrature", true, {}};
    double worst = 0.0;
    const NodePolar nodes[] = {to_polar({50.0, 0.0}), to_polar({100.0, 10.0}), to_polar({100.0, -10.0})};
    for (int i = 0; i < 50; ++i) {
        // s from 1e-2 to 1e8, receivers and roads cycled
        const double s = std::pow(10.0, -2.0 + 10.0 * i / 49.0);
        const NodePolar n = nodes[i % 3];
        const Road road = i % 2 == 0 ? Road::X : Road::Y;
        const double closed = laplace_closed(s, 0.5, 1e-3, n, road);
        const double quad = laplace_quadrature(s, 0.5, 1e-3, 2.0, n, road);
        worst = std::max(worst, rel_err(quad, closed));
    }
    const double oracle = std::numbers::pi * std::numbers::sqrt2 / 2.0;
    const double a4 = rel_err(laplace_exponent_integral(1.0, 4.0, 0.0), oracle);
    r.passed = worst <= 1e-6 && a4 <= 1e-8;
    r.detail = "grid max rel err " + fmt(worst) + ", alpha=4 integral rel err " + fmt(a4);
    return r;
}

CheckResult derivative_correctness()
{
    CheckResult r{"derivatives: bracket form and finite differences", true, {}};
    CounterRng rng = CounterRng::from_seed(2024).fork({3});
    double worst_bracket = 0.0;
    double worst_fd = 0.0;
    for (int i = 0; i < 50; ++i) {
        const double s = log_uniform(rng, 1.0, 1e6);
        const double lambda = log_uniform(rng, 1e-4, 1e-2);
        const double p = 0.1 + 0.9 * rng.uniform();
        const NodePolar n = to_polar({400.0 * rng.uniform() - 200.0, 400.0 * rng.uniform() - 200.0});
        const Road road = rng.uniform() < 0.5 ? Road::X : Road::Y;
        const double alpha = i % 2 == 0 ? 2.0 : 4.0;

        const TaylorScalar t = laplace_taylor(2, s, p, lambda, alpha, n, road);
        if (alpha == 2.0) {
            const double bracket = laplace_derivative_bracket_form(1, s, p, lambda, n, road);
            worst_bracket = std::max(worst_bracket, rel_err(t.derivative(1), bracket));
        }
        // Central differences of the exponent E (L = exp(-E)), taken on the
        // integrand in extended precision before integrating: E is nearly
        // linear in s when the road is far, so differencing E itself drowns
        // E'' in quadrature noise. Richardson over h and h/2.
        const double h_off = offset_from_road(n, road);
        auto diff_integral = [&](int order, double h) {
            auto g = [&](double u) {
                const long double d = std::pow(static_cast<long double>(h_off) * h_off + static_cast<long double>(u) * u,
                                               0.5L * alpha);
                auto f = [d](long double x) { return x / (x + d); };
                const long double x = s;
                const long double step = h;
                const long double v = order == 1 ? (f(x + step) - f(x - step)) / (2.0L * step)
                                                 : (f(x + step) - 2.0L * f(x) + f(x - step)) / (step * step);
                return static_cast<double>(v);
            };
            const double split = 4.0 * std::max(h_off, std::pow(s, 1.0 / alpha));
            const double core = integrate_adaptive(g, 0.0, split, 0.0, 1e-11).value;
            const double tail = integrate_power_tail(g, split, alpha, 0.0, 1e-11).value;
            return 2.0 * p * lambda * (core + tail);
        };
        auto richardson = [&](int order) {
            const double h = 1e-2 * s;
            return (4.0 * diff_integral(order, 0.5 * h) - diff_integral(order, h)) / 3.0;
        };
        const double e0 = alpha == 2.0 ? p * lambda * std::numbers::pi * s / std::sqrt(h_off * h_off + s)
                                        : p * lambda * laplace_exponent_integral(s, alpha, h_off);
        const double e1 = richardson(1);
        const double e2 = richardson(2);
        const double l0 = std::exp(-e0);
        const double d1 = -e1 * l0;
        const double d2 = (e1 * e1 - e2) * l0;
        worst_fd = std::max({worst_fd, rel_err(t.derivative(1), d1), rel_err(t.derivative(2), d2)});
    }
    r.passed = worst_bracket <= 1e-10 && worst_fd <= 1e-4;
    r.detail = "order-1 vs bracket " + fmt(worst_bracket) + ", orders 1-2 vs differences " + fmt(worst_fd);
    return r;
}

CheckResult pgfl_empirical(const CheckOptions& opt)
{
    CheckResult r{"PGFL empirical check", true, {}};
    const NodePolar rx = to_polar({50.0, 0.0});
    const PathLossParams pl;
    double worst = 0.0;
    int failures = 0;
    for (Road road : {Road::X, Road::Y}) {
        for (LinkClass k : {LinkClass::LOS, LinkClass::NLOS}) {
            PppConfig ppp;
            ppp.set_common(0.0);
            (road == Road::X ? (k == LinkClass::LOS ? ppp.lambda_x_los : ppp.lambda_x_nlos)
                             : (k == LinkClass::LOS ? ppp.lambda_y_los : ppp.lambda_y_nlos)) = 1e-3;
            const double alpha = pl.exponent(k);
            // arguments spanning light to heavy attenuation of the transform
            const double s_lo = alpha == 2.0 ? 1e2 : 1e4;
            const double s_step = alpha == 2.0 ? 10.0 : 100.0;
            const double far = far_field_mean(rx, ppp, pl, 1.0).total();

            std::array<double, 5> s{};
            std::array<double, 5> sum{};
            std::array<double, 5> sum2{};
            for (std::size_t j = 0; j < s.size(); ++j) {
                s[j] = s_lo * std::pow(s_step, static_cast<double>(j));
            }
            const CounterRng master =
                CounterRng::from_seed(opt.seed).fork({77, InterferenceRealization::component_index(road, k)});
            InterferenceRealization real;
            for (std::uint64_t t = 0; t < opt.trials; ++t) {
                CounterRng rng = master.fork({t});
                draw_realization_into(ppp, rng, real, mask_of(Receiver::R));
                const double i = aggregate_interference(rx, Receiver::R, real, pl, 1.0).total() + far;
                for (std::size_t j = 0; j < s.size(); ++j) {
                    const double v = std::exp(-s[j] * i);
                    sum[j] += v;
                    sum2[j] += v * v;
                }
            }
            const double n = static_cast<double>(opt.trials);
            for (std::size_t j = 0; j < s.size(); ++j) {
                const double mean = sum[j] / n;
                const double se = std::sqrt(std::max(sum2[j] / n - mean * mean, 0.0) / n);
                const double want = alpha == 2.0 ? laplace_closed(s[j], ppp.p, 1e-3, rx, road)
                                                 : laplace_quadrature(s[j], ppp.p, 1e-3, alpha, rx, road);
                const double z = se > 0.0 ? (mean - want) / se : (mean == want ? 0.0 : 1e9);
                worst = std::max(worst, std::abs(z));
                if (!(std::abs(z) <= 3.0)) {
                    ++failures;
                    r.passed = false;
                }
            }
        }
    }
    r.detail = "4 components x 5 arguments, max |z| = " + fmt(worst) + ", " + std::to_string(failures) +
               " beyond 3";
    return r;
}

CheckResult degenerate_regime(const CheckOptions& opt)
{
    CheckResult r{"degenerate regime and interference-free limit", true, {}};
    const std::uint64_t trials = std::min<std::uint64_t>(opt.trials, 5000);
    std::ostringstream bad;

    ScenarioConfig deg;
    deg.noma.rate1 = 1.2;  // theta1 = 2^2.4 - 1 > a1/a2 = 4
    for (Kernel k : {Kernel::Paper, Kernel::Exact}) {
        if (outage_o1(deg, k) != 1.0 || outage_o2(deg, k) != 1.0) {
            bad << " analytic-degenerate";
        }
    }
    const EstimatePair mc = estimate(deg, Scheme::NOMA, trials, opt.seed, opt.workers);
    if (mc.o1.p_hat != 1.0 || mc.o2.p_hat != 1.0) {
        bad << " mc-degenerate";
    }

    ScenarioConfig quiet;
    quiet.ppp.set_common(0.0);
    for (Scheme scheme : {Scheme::NOMA, Scheme::OMA}) {
        for (Kernel k : {Kernel::Paper, Kernel::Exact}) {
            for (int event : {1, 2}) {
                if (analytic_outage(quiet, scheme, event, k) != 0.0) {
                    bad << " analytic-quiet";
                }
            }
        }
        const EstimatePair q = estimate(quiet, scheme, trials, opt.seed, opt.workers);
        if (q.o1.p_hat != 0.0 || q.o2.p_hat != 0.0) {
            bad << " mc-quiet";
        }
    }
    r.passed = bad.str().empty();
    r.detail = r.passed ? "outage exactly 1 and exactly 0 (analytic and " + std::to_string(trials) + " trials)"
                        : "mismatch:" + bad.str();
    return r;
}

namespace {

struct Curve {
    std::vector<double> o1;
    std::vector<double> o2;
};

Curve analytic_curve(const SweepSpec& spec, LinkModel model, Scheme scheme)
{
    Curve c;
    for (double v : spec.grid) {
        const ScenarioConfig cfg = apply_link_model(apply_sweep_value(spec.base, spec.variable, v), model);
        c.o1.push_back(analytic_outage(cfg, scheme, 1, Kernel::Exact));
        c.o2.push_back(analytic_outage(cfg, scheme, 2, Kernel::Exact));
    }
    return c;
}

}  // namespace

CheckResult figure3_ordering()
{
    CheckResult r{"figure 3 ordering LOS-only >= mixed >= NLOS-only", true, {}};
    const SweepSpec spec = figure_preset(3, ScenarioConfig{});
    const Curve los = analytic_curve(spec, LinkModel::LosOnly, Scheme::NOMA);
    const Curve mixed = analytic_curve(spec, LinkModel::Mixed, Scheme::NOMA);
    const Curve nlos = analytic_curve(spec, LinkModel::NlosOnly, Scheme::NOMA);
    int los_mixed = 0;
    int mixed_nlos = 0;
    for (std::size_t i = 0; i < spec.grid.size(); ++i) {
        los_mixed += (los.o1[i] < mixed.o1[i]) + (los.o2[i] < mixed.o2[i]);
        mixed_nlos += (mixed.o1[i] < nlos.o1[i]) + (mixed.o2[i] < nlos.o2[i]);
    }
    r.passed = los_mixed == 0 && mixed_nlos == 0;
    r.detail = "violations of LOS>=mixed: " + std::to_string(los_mixed) + "/20, mixed>=NLOS: " +
               std::to_string(mixed_nlos) + "/20; at lambda=1e-4 O1 LOS " + fmt(los.o1.front()) + ", mixed " +
               fmt(mixed.o1.front()) + ", NLOS " + fmt(nlos.o1.front());
    return r;
}

CheckResult figure4_ordering()
{
    CheckResult r{"figure 4 ordering NOMA < OMA for D2", true, {}};
    const SweepSpec spec = figure_preset(4, ScenarioConfig{});
    const Curve noma = analytic_curve(spec, LinkModel::Mixed, Scheme::NOMA);
    const Curve oma = analytic_curve(spec, LinkModel::Mixed, Scheme::OMA);
    int violations = 0;
    double min_gap = 1.0;
    for (std::size_t i = 0; i < spec.grid.size(); ++i) {
        violations += !(noma.o2[i] < oma.o2[i]);
        min_gap = std::min(min_gap, oma.o2[i] - noma.o2[i]);
    }
    r.passed = violations == 0;
    r.detail = std::to_string(violations) + "/10 violations, smallest OMA-NOMA gap " + fmt(min_gap);
    return r;
}

CheckResult figure5_monotone()
{
    CheckResult r{"figure 5 outage nonincreasing with distance to intersection", true, {}};
    const SweepSpec spec = figure_preset(5, ScenarioConfig{});
    int violations = 0;
    for (Scheme scheme : {Scheme::NOMA, Scheme::OMA}) {
        const Curve c = analytic_curve(spec, LinkModel::Mixed, scheme);
        for (std::size_t i = 1; i < spec.grid.size(); ++i) {
            violations += (c.o1[i] > c.o1[i - 1]) + (c.o2[i] > c.o2[i - 1]);
        }
    }
    r.passed = violations == 0;
    r.detail = std::to_string(violations) + " increases over 2 schemes x 2 destinations x 10 steps";
    return r;
}

CheckResult gamma_sum_identity()
{
    CheckResult r{"exponential-sum identity for the gamma CCDF", true, {}};
    CounterRng rng = CounterRng::from_seed(2024).fork({12});
    double worst = 0.0;
    for (int m = 1; m <= 4; ++m) {
        for (int i = 0; i < 20; ++i) {
            const double mu = 0.5 + rng.uniform();
            const double x = log_uniform(rng, 1e-3, 10.0);
            const double a = m * x / mu;
            auto integrand = [m](double t) { return std::pow(t, m - 1) * std::exp(-t); };
            // finite head, then an exponential tail cut far beyond any mass
            const double upper = a + 60.0 + 4.0 * m;
            const QuadratureResult q = integrate_adaptive(integrand, a, upper, 0.0, 1e-14);
            const double want = q.value / std::tgamma(m);
            worst = std::max(worst, rel_err(gamma_ccdf(m, mu, x), want));
        }
    }
    r.passed = worst <= 1e-10;
    r.detail = "m = 1..4, 20 points each, max rel err " + fmt(worst);
    return r;
}

CheckResult kernel_gap()
{
    CheckResult r{"kernel gap report", true, {}};
    const SweepSpec spec = figure_preset(3, ScenarioConfig{});
    double gap = 0.0;
    double at = 0.0;
    for (double v : spec.grid) {
        const ScenarioConfig cfg = apply_sweep_value(spec.base, spec.variable, v);
        for (Scheme scheme : {Scheme::NOMA, Scheme::OMA}) {
            for (int event : {1, 2}) {
                const double g = std::abs(analytic_outage(cfg, scheme, event, Kernel::Paper) -
                                          analytic_outage(cfg, scheme, event, Kernel::Exact));
                if (g > gap) {
                    gap = g;
                    at = v;
                }
            }
        }
    }

    // with m = 1 on both classes the two kernels coincide hop by hop
    double m1 = 0.0;
    for (double v : spec.grid) {
        ScenarioConfig cfg = apply_sweep_value(spec.base, spec.variable, v);
        cfg.fading.m_los = 1;
        const double psi[] = {0.5, 1.0 / 0.6, 15.0, 255.0};
        for (double s : psi) {
            for (const auto& [a, b] : {std::pair{cfg.s, cfg.r}, std::pair{cfg.r, cfg.d1}, std::pair{cfg.r, cfg.d2}}) {
                m1 = std::max(m1, std::abs(hop_success(cfg, a, b, s, Kernel::Paper) -
                                           hop_success(cfg, a, b, s, Kernel::Exact)));
            }
        }
    }
    r.passed = m1 <= 1e-12;
    r.detail = "m_los=2: max |paper-exact| " + fmt(gap) + " at lambda=" + fmt(at) + "; m=1: " + fmt(m1);
    return r;
}

CheckResult window_doubling(const CheckOptions& opt)
{
    CheckResult r{"window doubling", true, {}};
    double worst = 0.0;
    for (double lambda : {1e-3, 5e-3}) {
        for (Scheme scheme : {Scheme::NOMA, Scheme::OMA}) {
            ScenarioConfig cfg;
            cfg.ppp.set_common(lambda);
            const EstimatePair base = estimate(cfg, scheme, opt.trials, opt.seed, opt.workers);
            cfg.ppp.window *= 2.0;
            const EstimatePair wide = estimate(cfg, scheme, opt.trials, opt.seed, opt.workers);
            for (const auto& [a, b] : {std::pair{base.o1, wide.o1}, std::pair{base.o2, wide.o2}}) {
                const double se = std::max(a.std_err, b.std_err);
                const double shift = std::abs(a.p_hat - b.p_hat);
                const double ratio = shift == 0.0 ? 0.0 : (se > 0.0 ? shift / se : 1e9);
                worst = std::max(worst, ratio);
                if (!(ratio < 1.0)) {
                    r.passed = false;
                }
            }
        }
    }
    r.detail = "lambda in {1e-3, 5e-3}, both schemes: max |shift|/std_err = " + fmt(worst);
    return r;
}

std::vector<CheckResult> quick_suite(const CheckOptions& opt)
{
    return {laplace_closed_vs_quadrature(), derivative_correctness(), degenerate_regime(opt), gamma_sum_identity(),
            kernel_gap(),  figure4_ordering(), figure5_monotone(), figure3_ordering()};
}

}  // namespace noma::checks
