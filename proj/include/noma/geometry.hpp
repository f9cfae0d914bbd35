#pragma once

#include <numbers>

namespace noma {

/// Cartesian position in meters. The X road is the horizontal axis, the Y road
/// the vertical axis, and the intersection sits at the origin.
struct Position {
    double x = 0.0;
    double y = 0.0;
};

/// Receiver geometry relative to the intersection.
struct NodePolar {
    double m = 0.0;      ///< distance to the intersection [m]
    double theta = 0.0;  ///< angle to the X road, in [0, 2*pi)
};

enum class Road { X, Y };

NodePolar to_polar(Position p);
Position from_polar(NodePolar n);

double distance(Position a, Position b);

/// Distance from receiver `n` to the point at coordinate `t` on `road`.
double dist_to_road_point(NodePolar n, double t, Road road);

/// Perpendicular distance from the receiver to `road` (m*|sin| for X, m*|cos| for Y).
double offset_from_road(NodePolar n, Road road);

/// Coordinate of the receiver's projection onto `road`.
double projection_on_road(NodePolar n, Road road);

}  // namespace noma
