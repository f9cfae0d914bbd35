#include "noma/geometry.hpp"

#include <cmath>

namespace noma {

NodePolar to_polar(Position p)
{
    const double m = std::hypot(p.x, p.y);
    if (m == 0.0) {
        return {0.0, 0.0};
    }
    double theta = std::atan2(p.y, p.x);
    if (theta < 0.0) {
        theta += 2.0 * std::numbers::pi;
    }
    // atan2 of a tiny negative y can round up to exactly 2*pi
    if (theta >= 2.0 * std::numbers::pi) {
        theta = 0.0;
    }
    return {m, theta};
}

Position from_polar(NodePolar n)
{
    return {n.m * std::cos(n.theta), n.m * std::sin(n.theta)};
}

double distance(Position a, Position b)
{
    return std::hypot(a.x - b.x, a.y - b.y);
}

double offset_from_road(NodePolar n, Road road)
{
    return road == Road::X ? std::abs(n.m * std::sin(n.theta)) : std::abs(n.m * std::cos(n.theta));
}

double projection_on_road(NodePolar n, Road road)
{
    return road == Road::X ? n.m * std::cos(n.theta) : n.m * std::sin(n.theta);
}

double dist_to_road_point(NodePolar n, double t, Road road)
{
    return std::hypot(offset_from_road(n, road), t - projection_on_road(n, road));
}

}  // namespace noma
