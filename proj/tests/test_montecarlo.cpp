#include "noma/analytic.hpp"
#include "noma/errors.hpp"
#include "noma/montecarlo.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>

using namespace noma;

TEST_SUITE("montecarlo") {

TEST_CASE("aggregate interference")
{
    InterferenceRealization real;
    const PathLossParams pl;
    const RoadInterference none = aggregate_interference({0.0, 0.0}, Receiver::R, real, pl, 2.5e-3);
    CHECK(none.x == 0.0);
    CHECK(none.y == 0.0);

    MarkedPoint pt;
    pt.t = 30.0;
    pt.active = true;
    pt.fading = {1.0, 1.0, 1.0};
    real.at(Road::X, LinkClass::LOS).push_back(pt);
    const RoadInterference one = aggregate_interference({0.0, 0.0}, Receiver::R, real, pl, 2.5e-3);
    CHECK(one.x == doctest::Approx(2.5e-3 / 900.0));
    CHECK(one.y == 0.0);

    // inactive points and other receivers' marks do not count
    pt.active = false;
    real.at(Road::Y, LinkClass::NLOS).push_back(pt);
    pt.active = true;
    pt.fading = {0.0, 2.0, 0.0};
    real.at(Road::Y, LinkClass::LOS).push_back(pt);
    const RoadInterference two = aggregate_interference({0.0, 0.0}, Receiver::R, real, pl, 2.5e-3);
    CHECK(two.y == 0.0);
    const RoadInterference at_d1 = aggregate_interference(to_polar({0.0, 10.0}), Receiver::D1, real, pl, 1.0);
    CHECK(at_d1.y == doctest::Approx(2.0 / 400.0));
}

TEST_CASE("far-field mean")
{
    PppConfig ppp;
    ppp.set_common(0.0);
    ppp.lambda_x_los = 1e-3;
    ppp.p = 0.5;
    const PathLossParams pl;
    // receiver on the road at the origin: 2 * p lambda / extent
    const double e = ppp.extent(Road::X, LinkClass::LOS);
    CHECK(far_field_mean({0.0, 0.0}, ppp, pl, 1.0).x == doctest::Approx(2.0 * 5e-4 / e).epsilon(1e-9));
    // off the road: p lambda * 2 atan(h / E) / h
    const NodePolar rx = to_polar({0.0, 40.0});
    CHECK(far_field_mean(rx, ppp, pl, 3.0).x ==
          doctest::Approx(3.0 * 5e-4 * 2.0 * std::atan(40.0 / e) / 40.0).epsilon(1e-9));
}

TEST_CASE("SIRs")
{
    const NomaSirs free = compute_sirs(1.0, 0.8, 0.2, 0.0);
    CHECK(free.first == doctest::Approx(4.0));
    CHECK(free.second == std::numeric_limits<double>::infinity());
    const NomaSirs s = compute_sirs(1.0, 0.8, 0.2, 0.2);
    CHECK(s.first == doctest::Approx(2.0));
    CHECK(s.second == doctest::Approx(1.0));
    CHECK(oma_sir(1.0, 0.0) == std::numeric_limits<double>::infinity());
}

TEST_CASE("outage predicates")
{
    SirThresholds t;
    t.theta1 = 3.0;
    t.theta2 = 3.0;
    t.psi1 = 1.0;
    t.psi_max = 1.0;
    constexpr double inf = std::numeric_limits<double>::infinity();
    const TrialOutcome clear = evaluate_outage_events({{inf, inf}}, {{inf, inf}, {inf, inf}}, t);
    CHECK_FALSE(clear.o1);
    CHECK_FALSE(clear.o2);

    const TrialOutcome r1 = evaluate_outage_events({{2.0, inf}}, {{inf, inf}, {inf, inf}}, t);
    CHECK(r1.o_r1);
    CHECK(r1.o1);
    CHECK(r1.o2);

    const TrialOutcome r2 = evaluate_outage_events({{4.0, 1.0}}, {{inf, inf}, {inf, inf}}, t);
    CHECK_FALSE(r2.o1);
    CHECK(r2.o2);

    SirThresholds deg = t;
    deg.psi1.reset();
    deg.psi_max.reset();
    const TrialOutcome d = evaluate_outage_events({{inf, inf}}, {{inf, inf}, {inf, inf}}, deg);
    CHECK(d.o1);
    CHECK(d.o2);
}

TEST_CASE("event algebra per trial")
{
    ScenarioConfig cfg;
    cfg.ppp.set_common(2e-3);
    const CounterRng master = CounterRng::from_seed(5);
    for (std::uint64_t t = 0; t < 300; ++t) {
        const TrialOutcome o = simulate_noma_trial(cfg, master, t);
        CHECK(o.o1 == (o.o_r1 || o.o_d1));
        CHECK(o.o2 == (o.o_r2 || o.o_d2));
        CHECK((!o.o_r1 || o.o_r2));
        const TrialOutcome q = simulate_oma_trial(cfg, master, t);
        CHECK(q.o1 == (q.o_r1 || q.o_d1));
        CHECK(q.o2 == (q.o_r2 || q.o_d2));
    }
}

TEST_CASE("deterministic limits")
{
    ScenarioConfig quiet;
    quiet.ppp.set_common(0.0);
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        const EstimatePair e = estimate(quiet, Scheme::NOMA, 2000, seed);
        CHECK(e.o1.p_hat == 0.0);
        CHECK(e.o2.p_hat == 0.0);
        CHECK(e.o1.std_err == 0.0);
    }
    ScenarioConfig deg;
    deg.noma.rate1 = 1.2;
    const EstimatePair d = estimate(deg, Scheme::NOMA, 2000, 9);
    CHECK(d.o1.p_hat == 1.0);
    CHECK(d.o2.p_hat == 1.0);
}

TEST_CASE("estimates do not depend on the worker count")
{
    ScenarioConfig cfg;
    const EstimatePair one = estimate(cfg, Scheme::NOMA, 3000, 77, 1);
    const EstimatePair three = estimate(cfg, Scheme::NOMA, 3000, 77, 3);
    CHECK(one.o1.p_hat == three.o1.p_hat);
    CHECK(one.o2.p_hat == three.o2.p_hat);
    const EstimatePair oma1 = estimate(cfg, Scheme::OMA, 1000, 77, 1);
    const EstimatePair oma4 = estimate(cfg, Scheme::OMA, 1000, 77, 4);
    CHECK(oma1.o1.p_hat == oma4.o1.p_hat);
}

TEST_CASE("standard error bookkeeping")
{
    const OutageEstimate e = OutageEstimate::from_counts(250, 1000, 3);
    CHECK(e.p_hat == 0.25);
    CHECK(e.std_err == doctest::Approx(std::sqrt(0.25 * 0.75 / 1000.0)));
    CHECK(e.seed == 3);

    ScenarioConfig cfg;
    const EstimatePair small = estimate(cfg, Scheme::NOMA, 2000, 8);
    const EstimatePair big = estimate(cfg, Scheme::NOMA, 8000, 8);
    // four times the trials halves the standard error
    CHECK(big.o1.std_err == doctest::Approx(small.o1.std_err / 2.0).epsilon(0.1));
}

TEST_CASE("simulation agrees with the exact kernel at moderate trials")
{
    ScenarioConfig cfg;
    const EstimatePair e = estimate(cfg, Scheme::NOMA, 20000, 2024);
    CHECK(std::abs(outage_o1(cfg, Kernel::Exact) - e.o1.p_hat) <= 3.0 * e.o1.std_err);
    CHECK(std::abs(outage_o2(cfg, Kernel::Exact) - e.o2.p_hat) <= 3.0 * e.o2.std_err);
}

TEST_CASE("input checks")
{
    ScenarioConfig cfg;
    CHECK_THROWS_AS(estimate(cfg, Scheme::NOMA, 0, 1), ValidationError);
    CHECK_THROWS_AS(estimate(cfg, Scheme::Both, 10, 1), ValidationError);
    cfg.noma.a2 = 0.3;
    CHECK_THROWS_AS(estimate(cfg, Scheme::NOMA, 10, 1), ValidationError);
}

}
