#include "horo/sampling.hpp"

#include <cmath>

namespace horo {

complexd sample_unit_complex(SplitMix64& g) {
    double th = g.range(0.0, 6.283185307179586);
    return complexd(std::cos(th), std::sin(th));
}

cvec sample_unit_cvec(int n, SplitMix64& g) {
    cvec v(static_cast<size_t>(n));
    double s = 0.0;
    for (auto& c : v) {
        c = complexd(g.gaussian(), g.gaussian());
        s += std::norm(c);
    }
    s = std::sqrt(s);
    if (s < 1e-12) {
        v[0] = complexd(1.0, 0.0);
        for (size_t i = 1; i < v.size(); ++i) v[i] = complexd(0.0, 0.0);
        return v;
    }
    for (auto& c : v) c /= s;
    return v;
}

Point sample_point(const Space& space, SplitMix64& g, double radius_cap) {
    switch (space.kind()) {
        case SpaceKind::real_line:
            return Point(g.range(-5.0, 5.0));
        case SpaceKind::sup_rn: {
            rvec v(static_cast<size_t>(space.dim()));
            for (auto& c : v) c = g.range(-5.0, 5.0);
            return Point(v);
        }
        case SpaceKind::disc: {
            double r = radius_cap * std::sqrt(g.unit());
            return Point(r * sample_unit_complex(g));
        }
        case SpaceKind::ball: {
            cvec u = sample_unit_cvec(space.dim(), g);
            double r = radius_cap * std::pow(g.unit(), 1.0 / (2.0 * space.dim()));
            for (auto& c : u) c *= r;
            return Point(u);
        }
        case SpaceKind::polydisc: {
            cvec v(static_cast<size_t>(space.dim()));
            for (auto& c : v) c = radius_cap * std::sqrt(g.unit()) * sample_unit_complex(g);
            return Point(v);
        }
        case SpaceKind::star_graph:
            return sample_star_dyadic(g);
        case SpaceKind::product: {
            PointTuple t;
            for (const Space& f : space.factors()) t.push_back(sample_point(f, g, radius_cap));
            return Point(t);
        }
    }
    fail(errc::bad_argument, "unreachable space kind");
}

Point sample_star_dyadic(SplitMix64& g, int max_edge) {
    int edge = g.uniform_int(1, max_edge);
    int ticks = g.uniform_int(0, edge * 8);
    return Point(StarPoint{edge, static_cast<double>(ticks) / 8.0});
}

}  // namespace horo
