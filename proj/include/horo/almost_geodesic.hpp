#pragma once

#include "horo/path.hpp"

namespace horo {

// Triangle-inequality defect d(y^m, y^k) + d(y^k, y^0) - d(y^m, y^0) for
// 0 <= k <= m; always >= 0 up to roundoff.
double almost_geodesic_defect(const Space& space, const std::vector<Point>& seq, int m, int k);

struct DefectPair {
    int m = 0, k = 0;
    double defect = 0.0;
};

struct DefectReport {
    double sup_defect = 0.0;
    int worst_m = 0, worst_k = 0;
    int start_index = 0;  // the N of the sup over m >= k >= N
    double epsilon = 0.0;
    int n_points = 0;
    bool monotone_radii = true;  // d(y^n, y^0) strictly increasing on the data
    bool verdict = false;        // sup_defect < epsilon on the probed window
    std::vector<DefectPair> pairs;
};

DefectReport is_almost_geodesic(const Space& space, const std::vector<Point>& seq, double epsilon,
                                int start_index = 0);

// Piecewise ray through the anchors: breakpoints Delta_n = d(y^n, y^0),
// segments affinely reparametrised connectors. Requires strictly increasing
// radii and connectable consecutive anchors.
Path induced_ray(const Space& space, const std::vector<Point>& seq);

struct RadiusPoint {
    double t = 0.0;
    Point point;
};

// Smallest t with d(gamma(t), gamma(0)) = beta within tol, by first-bracket
// scan plus bisection on the continuous radius profile.
RadiusPoint ray_point_at_radius(const Path& ray, double beta, double tol = 1e-10);

// Estimates lim_T d(z, gamma(T)) - d(b, gamma(T)) over the given schedule.
LimitEstimate busemann_from_ray(const Space& space, const Path& ray, const Point& z,
                                const std::vector<double>& schedule, double tol = 1e-6,
                                int window = 5);

}  // namespace horo
