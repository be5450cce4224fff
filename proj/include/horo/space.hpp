#pragma once

#include <complex>
#include <variant>
#include <vector>

#include "horo/error.hpp"

namespace horo {

using complexd = std::complex<double>;
using cvec = std::vector<complexd>;
using rvec = std::vector<double>;

// Point on the star graph: edge index k >= 1 (edge k has length k) and offset
// s in [0, k] measured from the centre. Any (k, 0) is the centre.
struct StarPoint {
    int edge = 1;
    double offset = 0.0;
};

struct Point;
using PointTuple = std::vector<Point>;

// A point of one of the model spaces. The active alternative must match the
// space kind; `validate_point` checks membership.
struct Point {
    std::variant<double, rvec, complexd, cvec, StarPoint, PointTuple> payload;

    Point() : payload(0.0) {}
    Point(double x) : payload(x) {}
    Point(rvec v) : payload(std::move(v)) {}
    Point(complexd z) : payload(z) {}
    Point(cvec z) : payload(std::move(z)) {}
    Point(StarPoint s) : payload(s) {}
    Point(PointTuple t) : payload(std::move(t)) {}

    double scalar() const;
    const rvec& vec() const;
    complexd cplx() const;
    const cvec& cplx_vec() const;
    const StarPoint& star() const;
    const PointTuple& tuple() const;
};

enum class SpaceKind {
    real_line,
    sup_rn,
    disc,
    ball,
    polydisc,
    star_graph,
    product,
};

const char* kind_name(SpaceKind k);

// Descriptor of a model metric space together with its basepoint. Immutable
// after construction; products are flattened and get the tuple basepoint.
class Space {
  public:
    Space() : kind_(SpaceKind::real_line), dim_(1), basepoint_(0.0) {}

    static Space real_line();
    static Space sup_rn(int n);
    static Space disc();
    static Space ball(int n);
    static Space polydisc(int n);
    static Space star_graph();
    static Space product(std::vector<Space> factors);

    SpaceKind kind() const { return kind_; }
    int dim() const { return dim_; }
    const std::vector<Space>& factors() const { return factors_; }
    const Point& basepoint() const { return basepoint_; }

    Space with_basepoint(Point b) const;

    bool same_shape(const Space& other) const;  // kind/dim/factors match (basepoint ignored)

  private:
    Space(SpaceKind k, int n) : kind_(k), dim_(n) {}

    SpaceKind kind_;
    int dim_;
    std::vector<Space> factors_;
    Point basepoint_;
};

// Direction data for a boundary point.
struct LineDir {
    int sign = +1;  // ray direction: gamma(t) = sign * t
};
struct SupDir {
    std::vector<int> J;      // active coordinates, 0-based, sorted
    std::vector<int> signs;  // ray-direction signs, one per entry of J
};
struct DiscDir {
    complexd xi;  // |xi| = 1 within 1e-12
};
struct BallDir {
    cvec xi;  // ||xi|| = 1 within 1e-12
};
struct BoundaryPoint;
struct ProductDir {
    std::vector<int> J;  // factors with boundary data, 0-based, sorted
    std::vector<BoundaryPoint> factors;
};

struct BoundaryPoint {
    std::variant<LineDir, SupDir, DiscDir, BallDir, ProductDir> payload;
};

// Open-domain membership margin and unit-direction tolerance.
inline constexpr double kInteriorMargin = 1e-15;
inline constexpr double kBoundaryTol = 1e-12;

// Throws on failure: dimension_mismatch, out_of_domain, malformed_star_coordinate.
void validate_point(const Space& space, const Point& x);

void validate_boundary(const Space& space, const BoundaryPoint& xi);

}  // namespace horo
