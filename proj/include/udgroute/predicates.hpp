#pragma once

#include "udgroute/geometry.hpp"

namespace udgroute {

struct Point {
  double x;
  double y;
};

inline Point point_of(const Site& s) { return {s.x, s.y}; }

// Exact-sign geometric predicates: a floating-point filter with a rational
// fallback when the filter cannot certify the sign.

/// +1 if a, b, c turn counter-clockwise, -1 if clockwise, 0 if collinear.
int orient2d(Point a, Point b, Point c);

/// +1 if d lies strictly inside the circle through the counter-clockwise
/// triangle a, b, c; -1 if strictly outside; 0 if cocircular.
int incircle(Point a, Point b, Point c, Point d);

/// True if the closed segments ab and cd share a point other than a common
/// endpoint (a proper crossing, a touching, or a collinear overlap).
bool segments_cross(Point a, Point b, Point c, Point d);

}  // namespace udgroute
