#include "noma/errors.hpp"
#include "noma/pointprocess.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

using namespace noma;

namespace {

struct Moments {
    double mean = 0.0;
    double var = 0.0;
};

Moments moments(const std::vector<double>& v)
{
    Moments m;
    for (double x : v) {
        m.mean += x;
    }
    m.mean /= static_cast<double>(v.size());
    for (double x : v) {
        m.var += (x - m.mean) * (x - m.mean);
    }
    m.var /= static_cast<double>(v.size() - 1);
    return m;
}

}  // namespace

TEST_SUITE("pointprocess") {

TEST_CASE("null process")
{
    CounterRng rng = CounterRng::from_seed(1);
    CHECK(sample_ppp_segment(0.0, 5000.0, rng).empty());
    PppConfig cfg;
    cfg.set_common(0.0);
    const InterferenceRealization r = draw_realization(cfg, rng);
    for (const auto& pts : r.points) {
        CHECK(pts.empty());
    }
}

TEST_CASE("segment counts are Poisson and points uniform")
{
    const CounterRng master = CounterRng::from_seed(2);
    std::vector<double> counts;
    double inside_half = 0.0;
    double total = 0.0;
    for (std::uint64_t i = 0; i < 10000; ++i) {
        CounterRng rng = master.fork({i});
        const std::vector<double> pts = sample_ppp_segment(0.01, 5000.0, rng);
        counts.push_back(static_cast<double>(pts.size()));
        for (double t : pts) {
            REQUIRE(std::abs(t) <= 5000.0);
            inside_half += std::abs(t) <= 2500.0;
        }
        total += static_cast<double>(pts.size());
    }
    const Moments m = moments(counts);
    CHECK(std::abs(m.mean - 100.0) <= 3.0);
    CHECK(std::abs(m.var / m.mean - 1.0) <= 0.05);
    CHECK(inside_half / total == doctest::Approx(0.5).epsilon(0.01));
}

TEST_CASE("ALOHA marks")
{
    CounterRng rng = CounterRng::from_seed(3);
    const std::vector<double> pts(100000, 1.0);
    const auto all = aloha_thin(pts, 1.0, rng);
    const auto none = aloha_thin(pts, 0.0, rng);
    const auto half = aloha_thin(pts, 0.5, rng);
    CHECK(std::all_of(all.begin(), all.end(), [](const MarkedPoint& p) { return p.active; }));
    CHECK(std::none_of(none.begin(), none.end(), [](const MarkedPoint& p) { return p.active; }));
    const double frac = static_cast<double>(std::count_if(half.begin(), half.end(),
                                                          [](const MarkedPoint& p) { return p.active; })) /
                        100000.0;
    CHECK(std::abs(frac - 0.5) <= 0.005);
}

TEST_CASE("thinning matches the reduced intensity")
{
    const CounterRng master = CounterRng::from_seed(4);
    std::vector<double> thinned;
    std::vector<double> direct;
    for (std::uint64_t i = 0; i < 10000; ++i) {
        CounterRng a = master.fork({i, 0});
        CounterRng b = master.fork({i, 1});
        const auto marked = aloha_thin(sample_ppp_segment(0.01, 2000.0, a), 0.3, a);
        thinned.push_back(static_cast<double>(
            std::count_if(marked.begin(), marked.end(), [](const MarkedPoint& p) { return p.active; })));
        direct.push_back(static_cast<double>(sample_ppp_segment(0.003, 2000.0, b).size()));
    }
    const Moments t = moments(thinned);
    const Moments d = moments(direct);
    CHECK(t.mean == doctest::Approx(d.mean).epsilon(0.05));
    CHECK(t.var == doctest::Approx(d.var).epsilon(0.05));
}

TEST_CASE("superposition matches the summed intensity")
{
    const CounterRng master = CounterRng::from_seed(5);
    std::vector<double> merged;
    std::vector<double> single;
    for (std::uint64_t i = 0; i < 10000; ++i) {
        CounterRng a = master.fork({i, 0});
        CounterRng b = master.fork({i, 1});
        CounterRng c = master.fork({i, 2});
        merged.push_back(static_cast<double>(sample_ppp_segment(0.004, 3000.0, a).size() +
                                             sample_ppp_segment(0.006, 3000.0, b).size()));
        single.push_back(static_cast<double>(sample_ppp_segment(0.01, 3000.0, c).size()));
    }
    const Moments m = moments(merged);
    const Moments s = moments(single);
    CHECK(m.mean == doctest::Approx(s.mean).epsilon(0.05));
    CHECK(m.var == doctest::Approx(s.var).epsilon(0.05));
}

TEST_CASE("realization totals and marks")
{
    PppConfig cfg;
    cfg.set_common(0.01);
    cfg.window = 5000.0;
    cfg.p = 1.0;  // extent = max(window, 20 / 0.01) = window
    const CounterRng master = CounterRng::from_seed(6);
    double total = 0.0;
    double sxy = 0.0;
    double sx = 0.0;
    double sy = 0.0;
    double sxx = 0.0;
    double syy = 0.0;
    double n = 0.0;
    for (std::uint64_t i = 0; i < 10000; ++i) {
        CounterRng rng = master.fork({i});
        const InterferenceRealization r = draw_realization(cfg, rng);
        for (const auto& pts : r.points) {
            total += static_cast<double>(pts.size());
            for (const MarkedPoint& p : pts) {
                REQUIRE(std::abs(p.t) <= 5000.0);
                for (double h : p.fading) {
                    REQUIRE(h > 0.0);
                }
                if (n < 100000) {
                    const double x = p.fading[0];
                    const double y = p.fading[1];
                    sx += x;
                    sy += y;
                    sxy += x * y;
                    sxx += x * x;
                    syy += y * y;
                    n += 1.0;
                }
            }
        }
    }
    CHECK(std::abs(total / 10000.0 - 400.0) <= 10.0);
    const double cov = sxy / n - (sx / n) * (sy / n);
    const double corr = cov / std::sqrt((sxx / n - (sx / n) * (sx / n)) * (syy / n - (sy / n) * (sy / n)));
    CHECK(std::abs(corr) < 0.01);
}

TEST_CASE("determinism and prefix stability")
{
    PppConfig cfg;
    cfg.set_common(2e-3);
    CounterRng a = CounterRng::from_seed(8);
    CounterRng b = CounterRng::from_seed(8);
    const InterferenceRealization r1 = draw_realization(cfg, a);
    const InterferenceRealization r2 = draw_realization(cfg, b);
    for (std::size_t c = 0; c < 4; ++c) {
        REQUIRE(r1.points[c].size() == r2.points[c].size());
        for (std::size_t i = 0; i < r1.points[c].size(); ++i) {
            CHECK(r1.points[c][i].t == r2.points[c][i].t);
            CHECK(r1.points[c][i].active == r2.points[c][i].active);
            CHECK(r1.points[c][i].fading == r2.points[c][i].fading);
        }
    }

    // a wider window only adds points beyond the old one, and requesting
    // fewer receivers leaves the drawn marks untouched
    PppConfig wide = cfg;
    wide.window *= 2.0;
    CounterRng c = CounterRng::from_seed(8);
    const InterferenceRealization r3 = draw_realization(wide, c, mask_of(Receiver::D1));
    for (std::size_t k = 0; k < 4; ++k) {
        const double extent = cfg.extent(k < 2 ? Road::X : Road::Y, k % 2 == 0 ? LinkClass::LOS : LinkClass::NLOS);
        std::size_t matched = 0;
        for (const MarkedPoint& p : r3.points[k]) {
            if (std::abs(p.t) > extent) {
                continue;
            }
            const auto it = std::find_if(r1.points[k].begin(), r1.points[k].end(),
                                         [&](const MarkedPoint& q) { return q.t == p.t; });
            REQUIRE(it != r1.points[k].end());
            CHECK(it->active == p.active);
            CHECK(it->fading[1] == p.fading[1]);
            CHECK(p.fading[0] == 0.0);
            ++matched;
        }
        CHECK(matched == r1.points[k].size());
    }
}

TEST_CASE("extent widens at low intensity")
{
    PppConfig cfg;
    cfg.set_common(1e-4);
    cfg.p = 0.5;
    CHECK(cfg.extent(Road::X, LinkClass::LOS) == doctest::Approx(kFarFieldActive / 5e-5));
    cfg.set_common(1e-2);
    CHECK(cfg.extent(Road::Y, LinkClass::NLOS) == cfg.window);
    cfg.p = 0.0;
    CHECK(cfg.extent(Road::Y, LinkClass::NLOS) == cfg.window);
}

TEST_CASE("config validation")
{
    PppConfig cfg;
    cfg.lambda_y_nlos = -1.0;
    CHECK_THROWS_AS(validate(cfg), ValidationError);
    cfg = PppConfig{};
    cfg.p = 1.5;
    CHECK_THROWS_AS(validate(cfg), ValidationError);
    cfg = PppConfig{};
    cfg.window = 0.0;
    CHECK_THROWS_AS(validate(cfg), ValidationError);
}

}
