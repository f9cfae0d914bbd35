#include "noma/geometry.hpp"
#include "noma/rng.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace noma;

TEST_SUITE("geometry") {

TEST_CASE("polar coordinates of known points")
{
    const NodePolar o = to_polar({0.0, 0.0});
    CHECK(o.m == 0.0);
    CHECK(o.theta == 0.0);

    const NodePolar d1 = to_polar({100.0, 10.0});
    CHECK(d1.m == doctest::Approx(100.4988).epsilon(1e-6));
    CHECK(d1.theta == doctest::Approx(0.0997).epsilon(1e-3));

    const NodePolar y = to_polar({0.0, 5.0});
    CHECK(y.m == 5.0);
    CHECK(y.theta == doctest::Approx(std::numbers::pi / 2));

    // below the X road the angle wraps into [pi, 2 pi)
    const NodePolar d2 = to_polar({100.0, -10.0});
    CHECK(d2.theta > std::numbers::pi);
    CHECK(d2.theta < 2.0 * std::numbers::pi);
}

TEST_CASE("polar round trip on random positions")
{
    CounterRng rng = CounterRng::from_seed(1);
    for (int i = 0; i < 1000; ++i) {
        const Position p{2000.0 * rng.uniform() - 1000.0, 2000.0 * rng.uniform() - 1000.0};
        const NodePolar n = to_polar(p);
        const Position q = from_polar(n);
        CHECK(std::abs(q.x - p.x) <= 1e-12 * std::max(1.0, n.m));
        CHECK(std::abs(q.y - p.y) <= 1e-12 * std::max(1.0, n.m));
        CHECK(n.m == doctest::Approx(std::hypot(p.x, p.y)));
        CHECK(n.theta >= 0.0);
        CHECK(n.theta < 2.0 * std::numbers::pi);
    }
}

TEST_CASE("distances")
{
    CHECK(distance({0.0, 0.0}, {50.0, 0.0}) == 50.0);
    CHECK(distance({3.0, -2.0}, {3.0, -2.0}) == 0.0);
    CHECK(distance({0.0, 0.0}, {3.0, 4.0}) == 5.0);

    CounterRng rng = CounterRng::from_seed(2);
    auto draw = [&] { return Position{500.0 * rng.uniform() - 250.0, 500.0 * rng.uniform() - 250.0}; };
    for (int i = 0; i < 500; ++i) {
        const Position a = draw();
        const Position b = draw();
        const Position c = draw();
        CHECK(distance(a, b) == distance(b, a));
        CHECK(distance(a, c) <= distance(a, b) + distance(b, c) + 1e-12);
    }
}

TEST_CASE("distance to a point on a road")
{
    CHECK(dist_to_road_point({0.0, 0.0}, 7.0, Road::X) == doctest::Approx(7.0));
    CHECK(dist_to_road_point({10.0, std::numbers::pi / 2}, 0.0, Road::X) == doctest::Approx(10.0));
    CHECK(dist_to_road_point({10.0, std::numbers::pi / 2}, 10.0, Road::Y) == doctest::Approx(0.0).epsilon(1e-12));

    CounterRng rng = CounterRng::from_seed(3);
    for (int i = 0; i < 500; ++i) {
        const NodePolar n{300.0 * rng.uniform(), 2.0 * std::numbers::pi * rng.uniform()};
        const double t = 2000.0 * rng.uniform() - 1000.0;
        CHECK(dist_to_road_point(n, t, Road::X) >= n.m * std::abs(std::sin(n.theta)) - 1e-9);
        CHECK(dist_to_road_point(n, t, Road::Y) >= n.m * std::abs(std::cos(n.theta)) - 1e-9);
        // agrees with the Cartesian distance to (t, 0) and (0, t)
        const Position p = from_polar(n);
        CHECK(dist_to_road_point(n, t, Road::X) == doctest::Approx(distance(p, {t, 0.0})));
        CHECK(dist_to_road_point(n, t, Road::Y) == doctest::Approx(distance(p, {0.0, t})));
    }
}

}
