#pragma once

#include <functional>
#include <limits>
#include <optional>

#include "horo/horofunction.hpp"
#include "horo/space.hpp"

namespace horo {

// Unit-speed geodesic segment or (almost-)geodesic ray. Closed-form rays have
// radius_is_param = true: d(gamma(t), gamma(0)) = t identically. Piecewise rays
// carry breakpoints Delta_n with gamma(Delta_n) = anchors[n] exactly.
struct Path {
    Space space;
    double length = 0.0;  // finite extent of the parameter domain
    std::vector<double> breakpoints;
    std::vector<Point> anchors;
    bool radius_is_param = false;
    // Boundary limit when recognisable (set by boundary_ray); enables the
    // product Busemann construction over this ray.
    std::optional<Horofunction> limit;
    std::function<Point(double)> eval;

    Point at(double t) const;
    Point origin() const { return at(0.0); }
};

// Largest metric radius whose disc/ball coordinate stays inside the validation
// margin: 2 atanh(1 - kInteriorMargin).
double max_radial_extent();

// Geodesic segment from x to y, unit speed on [0, distance(x, y)].
// Supported: real line, sup-R^n, disc (Mobius transport of the radial
// segment), star graph along a single edge, products (per-factor constant
// speed), and ball/polydisc pairs on a common radius through the origin.
Path connect(const Space& space, const Point& x, const Point& y);

// Geodesic ray from the basepoint toward a boundary direction. Disc/ball:
// gamma(t) = tanh(t/2) xi. Sup-R^n / line: gamma(t) = t u with ||u||_inf = 1.
// Products are not supported here (offsets are required; see product_busemann).
Path boundary_ray(const Space& space, const BoundaryPoint& xi);

}  // namespace horo
