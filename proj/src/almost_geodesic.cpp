#include "horo/almost_geodesic.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

namespace horo {

double almost_geodesic_defect(const Space& space, const std::vector<Point>& seq, int m, int k) {
    if (seq.empty()) fail(errc::empty_input, "sequence must be non-empty");
    if (k < 0 || m < k || m >= static_cast<int>(seq.size()))
        fail(errc::bad_argument, "defect indices must satisfy 0 <= k <= m < len");
    const Point& y0 = seq.front();
    const Point& ym = seq[static_cast<size_t>(m)];
    const Point& yk = seq[static_cast<size_t>(k)];
    return distance(space, ym, yk) + distance(space, yk, y0) - distance(space, ym, y0);
}

DefectReport is_almost_geodesic(const Space& space, const std::vector<Point>& seq, double epsilon,
                                int start_index) {
    if (seq.empty()) fail(errc::empty_input, "sequence must be non-empty");
    const int n = static_cast<int>(seq.size());
    if (start_index < 0 || start_index >= n)
        fail(errc::bad_argument, "start index outside the sequence");

    DefectReport rep;
    rep.epsilon = epsilon;
    rep.start_index = start_index;
    rep.n_points = n;
    rep.sup_defect = 0.0;
    rep.worst_m = rep.worst_k = start_index;

    std::vector<double> radii(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) radii[static_cast<size_t>(i)] = distance(space, seq[static_cast<size_t>(i)], seq.front());
    for (int i = 0; i + 1 < n; ++i)
        if (!(radii[static_cast<size_t>(i)] < radii[static_cast<size_t>(i + 1)])) {
            rep.monotone_radii = false;
            break;
        }

    for (int k = start_index; k < n; ++k) {
        for (int m = k; m < n; ++m) {
            double d = almost_geodesic_defect(space, seq, m, k);
            rep.pairs.push_back(DefectPair{m, k, d});
            if (d > rep.sup_defect) {
                rep.sup_defect = d;
                rep.worst_m = m;
                rep.worst_k = k;
            }
        }
    }
    rep.verdict = rep.sup_defect < epsilon;
    return rep;
}

Path induced_ray(const Space& space, const std::vector<Point>& seq) {
    if (seq.size() < 2) fail(errc::empty_input, "need at least two anchors");
    const int n = static_cast<int>(seq.size());
    for (const Point& y : seq) validate_point(space, y);

    std::vector<double> bp(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        bp[static_cast<size_t>(i)] = distance(space, seq[static_cast<size_t>(i)], seq.front());
    for (int i = 0; i + 1 < n; ++i)
        if (!(bp[static_cast<size_t>(i)] < bp[static_cast<size_t>(i + 1)]))
            fail(errc::monotonicity_violation,
                 "d(y^n, y^0) must be strictly increasing for an induced ray");

    auto segs = std::make_shared<std::vector<Path>>();
    std::vector<double> speed(static_cast<size_t>(n - 1));
    for (int i = 0; i + 1 < n; ++i) {
        segs->push_back(connect(space, seq[static_cast<size_t>(i)], seq[static_cast<size_t>(i + 1)]));
        speed[static_cast<size_t>(i)] =
            segs->back().length / (bp[static_cast<size_t>(i + 1)] - bp[static_cast<size_t>(i)]);
    }

    Path ray;
    ray.space = space;
    ray.length = bp.back();
    ray.breakpoints = bp;
    ray.anchors = seq;
    ray.radius_is_param = false;
    auto anchors = std::make_shared<std::vector<Point>>(seq);
    auto bps = std::make_shared<std::vector<double>>(bp);
    ray.eval = [segs, anchors, bps, speed](double t) {
        const auto& b = *bps;
        // interval index with b[i] <= t <= b[i+1]
        size_t i = static_cast<size_t>(std::upper_bound(b.begin(), b.end(), t) - b.begin());
        if (i > 0) --i;
        if (i >= speed.size()) return anchors->back();
        if (t == b[i]) return (*anchors)[i];  // anchors are exact
        double s = std::min(speed[i] * (t - b[i]), (*segs)[i].length);
        return (*segs)[i].eval(s);
    };
    return ray;
}

RadiusPoint ray_point_at_radius(const Path& ray, double beta, double tol) {
    if (!(beta >= -1e-12)) fail(errc::bad_argument, "radius must be nonnegative");
    beta = std::max(beta, 0.0);
    if (beta == 0.0) return RadiusPoint{0.0, ray.at(0.0)};

    if (ray.radius_is_param) {
        if (beta > ray.length * (1.0 + 1e-12))
            fail(errc::radius_unreachable, "radius beyond the ray extent");
        return RadiusPoint{beta, ray.at(std::min(beta, ray.length))};
    }

    const Point origin = ray.at(0.0);
    auto radius = [&](double t) { return distance(ray.space, ray.at(t), origin); };

    // Scan grid: segment-aware when breakpoints exist, else uniform.
    std::vector<double> grid;
    if (ray.breakpoints.size() >= 2) {
        const int sub = 64;
        for (size_t i = 0; i + 1 < ray.breakpoints.size(); ++i) {
            double a = ray.breakpoints[i], b = ray.breakpoints[i + 1];
            for (int s = 0; s < sub; ++s)
                grid.push_back(a + (b - a) * static_cast<double>(s) / sub);
        }
        grid.push_back(ray.breakpoints.back());
    } else {
        const int sub = 512;
        for (int s = 0; s <= sub; ++s)
            grid.push_back(ray.length * static_cast<double>(s) / sub);
    }

    double prev_t = grid.front();
    double prev_f = radius(prev_t) - beta;
    if (std::fabs(prev_f) <= tol) return RadiusPoint{prev_t, ray.at(prev_t)};
    for (size_t i = 1; i < grid.size(); ++i) {
        double t = grid[i];
        double f = radius(t) - beta;
        if (std::fabs(f) <= tol && prev_f < 0.0) return RadiusPoint{t, ray.at(t)};
        if (prev_f < 0.0 && f >= 0.0) {
            // first bracket: bisect for the smallest crossing
            double lo = prev_t, hi = t;
            for (int it = 0; it < 200; ++it) {
                double mid = 0.5 * (lo + hi);
                double fm = radius(mid) - beta;
                if (std::fabs(fm) <= 0.5 * tol) {
                    hi = mid;
                    break;
                }
                if (fm < 0.0)
                    lo = mid;
                else
                    hi = mid;
            }
            return RadiusPoint{hi, ray.at(hi)};
        }
        prev_t = t;
        prev_f = f;
    }
    fail(errc::radius_unreachable, "radius not attained on the ray");
}

LimitEstimate busemann_from_ray(const Space& space, const Path& ray, const Point& z,
                                const std::vector<double>& schedule, double tol, int window) {
    if (schedule.empty()) fail(errc::empty_input, "schedule must be non-empty");
    for (double t : schedule)
        if (t > ray.length * (1.0 + 1e-12))
            fail(errc::radius_unreachable, "schedule exceeds the ray extent");
    std::vector<Point> pts;
    pts.reserve(schedule.size());
    for (double t : schedule) pts.push_back(ray.at(std::min(t, ray.length)));
    return horofunction_limit_estimate(space, pts, z, tol, window);
}

}  // namespace horo
