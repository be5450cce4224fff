#include "horo/path.hpp"

#include <algorithm>
#include <memory>
#include <cmath>

namespace horo {

Point Path::at(double t) const {
    if (!(t >= -1e-12) || t > length * (1.0 + 1e-12) + 1e-12)
        fail(errc::bad_argument, "path parameter outside [0, length]");
    return eval(std::clamp(t, 0.0, length));
}

double max_radial_extent() { return std::log(2.0 / kInteriorMargin - 1.0); }

namespace {

Path straight_segment(const Space& space, const Point& x, const Point& y, double length) {
    Path p;
    p.space = space;
    p.length = length;
    p.radius_is_param = true;
    if (space.kind() == SpaceKind::real_line) {
        double a = x.scalar(), b = y.scalar();
        double dir = (b >= a) ? 1.0 : -1.0;
        p.eval = [a, dir](double t) { return Point(a + dir * t); };
    } else {
        rvec a = x.vec(), b = y.vec();
        rvec u(a.size(), 0.0);
        if (length > 0.0)
            for (size_t i = 0; i < a.size(); ++i) u[i] = (b[i] - a[i]) / length;
        p.eval = [a, u](double t) {
            rvec out(a.size());
            for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + t * u[i];
            return Point(out);
        };
    }
    return p;
}

// Mobius map taking 0 to c, an isometry of the disc.
complexd mobius_from_origin(complexd c, complexd w) { return (c + w) / (1.0 + std::conj(c) * w); }

Path disc_segment(const Space& space, complexd x, complexd y, double length) {
    // Transport the radial segment: gamma(t) = m_x(tanh(t/2) e^{i theta}).
    complexd wy = (y - x) / (1.0 - std::conj(x) * y);
    complexd dir = (std::abs(wy) > 0.0) ? wy / std::abs(wy) : complexd(1.0, 0.0);
    Path p;
    p.space = space;
    p.length = length;
    p.radius_is_param = true;
    p.eval = [x, dir](double t) { return Point(mobius_from_origin(x, std::tanh(0.5 * t) * dir)); };
    return p;
}

// Collinearity through the origin: y = c x with c real and nonnegative, or
// either point at the origin. Returns the common direction and both radii.
struct RadialPair {
    cvec dir;  // scaled so the relevant norm is 1
    double rx = 0.0, ry = 0.0;  // coordinate radii in [0, 1)
};

double direction_norm(SpaceKind kind, const cvec& v) {
    if (kind == SpaceKind::ball) return std::sqrt(norm_sq(v));
    double m = 0.0;
    for (auto& c : v) m = std::max(m, std::abs(c));
    return m;
}

std::optional<RadialPair> radial_pair(SpaceKind kind, const cvec& x, const cvec& y) {
    double nx = direction_norm(kind, x), ny = direction_norm(kind, y);
    const cvec* lead = nullptr;
    double nlead = 0.0;
    if (nx >= ny) {
        lead = &x;
        nlead = nx;
    } else {
        lead = &y;
        nlead = ny;
    }
    RadialPair rp;
    if (nlead < 1e-15) {  // both at the origin
        rp.dir = cvec(x.size(), complexd(0.0, 0.0));
        rp.dir[0] = complexd(1.0, 0.0);
        return rp;
    }
    rp.dir.resize(x.size());
    for (size_t i = 0; i < x.size(); ++i) rp.dir[i] = (*lead)[i] / nlead;
    auto project = [&](const cvec& v, double nv) -> std::optional<double> {
        if (nv < 1e-15) return 0.0;
        complexd c = herm_dot(v, rp.dir);  // v should equal c * dir with c real >= 0
        if (std::fabs(c.imag()) > 1e-12 || c.real() < -1e-12) return std::nullopt;
        for (size_t i = 0; i < v.size(); ++i)
            if (std::abs(v[i] - c * rp.dir[i]) > 1e-12) return std::nullopt;
        return std::max(0.0, c.real());
    };
    // For the ball, dir has unit Euclidean norm so herm_dot projects exactly.
    // For the polydisc the lead point itself defines dir, so its projection is
    // nlead; check the other point componentwise.
    if (kind == SpaceKind::ball) {
        auto px = project(x, nx), py = project(y, ny);
        if (!px || !py) return std::nullopt;
        rp.rx = *px;
        rp.ry = *py;
        return rp;
    }
    auto ratio = [&](const cvec& v, double nv) -> std::optional<double> {
        if (nv < 1e-15) return 0.0;
        // largest-modulus coordinate of dir is 1; use it to read off the scale
        size_t k = 0;
        for (size_t i = 1; i < rp.dir.size(); ++i)
            if (std::abs(rp.dir[i]) > std::abs(rp.dir[k])) k = i;
        complexd c = v[k] / rp.dir[k];
        if (std::fabs(c.imag()) > 1e-12 || c.real() < -1e-12) return std::nullopt;
        for (size_t i = 0; i < v.size(); ++i)
            if (std::abs(v[i] - c * rp.dir[i]) > 1e-12) return std::nullopt;
        return std::max(0.0, c.real());
    };
    auto px = ratio(x, nx), py = ratio(y, ny);
    if (!px || !py) return std::nullopt;
    rp.rx = *px;
    rp.ry = *py;
    return rp;
}

Path radial_segment(const Space& space, const RadialPair& rp, double length) {
    double tx = 2.0 * std::atanh(rp.rx);
    double ty = 2.0 * std::atanh(rp.ry);
    double dir = (ty >= tx) ? 1.0 : -1.0;
    cvec u = rp.dir;
    Path p;
    p.space = space;
    p.length = length;
    p.radius_is_param = true;
    p.eval = [u, tx, dir](double t) {
        double r = std::tanh(0.5 * (tx + dir * t));
        cvec out(u.size());
        for (size_t i = 0; i < u.size(); ++i) out[i] = r * u[i];
        return Point(out);
    };
    return p;
}

Path star_segment(const Space& space, const StarPoint& a, const StarPoint& b, double length) {
    if (a.edge != b.edge && a.offset > 0.0 && b.offset > 0.0)
        fail(errc::unsupported_space, "star graph connectors exist along a single edge only");
    // Either a common edge, or one endpoint is the centre.
    int edge = (a.offset > 0.0) ? a.edge : b.edge;
    double s0 = (a.edge == edge) ? a.offset : 0.0;
    double s1 = (b.edge == edge) ? b.offset : 0.0;
    double dir = (s1 >= s0) ? 1.0 : -1.0;
    Path p;
    p.space = space;
    p.length = length;
    p.radius_is_param = true;
    p.eval = [edge, s0, dir](double t) { return Point(StarPoint{edge, s0 + dir * t}); };
    return p;
}

}  // namespace

Path connect(const Space& space, const Point& x, const Point& y) {
    validate_point(space, x);
    validate_point(space, y);
    const double L = distance(space, x, y);
    switch (space.kind()) {
        case SpaceKind::real_line:
        case SpaceKind::sup_rn:
            return straight_segment(space, x, y, L);
        case SpaceKind::disc:
            return disc_segment(space, x.cplx(), y.cplx(), L);
        case SpaceKind::ball:
        case SpaceKind::polydisc: {
            auto rp = radial_pair(space.kind(), x.cplx_vec(), y.cplx_vec());
            if (!rp)
                fail(errc::unsupported_space,
                     "only pairs on a common radius through the origin are connectable here");
            return radial_segment(space, *rp, L);
        }
        case SpaceKind::star_graph:
            return star_segment(space, x.star(), y.star(), L);
        case SpaceKind::product: {
            const PointTuple& a = x.tuple();
            const PointTuple& b = y.tuple();
            std::vector<Path> segs;
            std::vector<double> speeds;  // d_j / d_inf <= 1
            for (size_t i = 0; i < a.size(); ++i) {
                segs.push_back(connect(space.factors()[i], a[i], b[i]));
                speeds.push_back(L > 0.0 ? segs.back().length / L : 0.0);
            }
            Path p;
            p.space = space;
            p.length = L;
            p.radius_is_param = true;
            auto shared_segs = std::make_shared<std::vector<Path>>(std::move(segs));
            p.eval = [shared_segs, speeds](double t) {
                PointTuple out;
                out.reserve(shared_segs->size());
                for (size_t i = 0; i < shared_segs->size(); ++i)
                    out.push_back((*shared_segs)[i].eval(
                        std::min(t * speeds[i], (*shared_segs)[i].length)));
                return Point(out);
            };
            return p;
        }
    }
    fail(errc::bad_argument, "unreachable space kind");
}

Path boundary_ray(const Space& space, const BoundaryPoint& xi) {
    validate_boundary(space, xi);
    switch (space.kind()) {
        case SpaceKind::disc: {
            complexd d = std::get<DiscDir>(xi.payload).xi;
            Path p;
            p.space = space;
            p.length = max_radial_extent();
            p.radius_is_param = true;
            p.limit = disc_boundary(space, d);
            p.eval = [d](double t) { return Point(std::tanh(0.5 * t) * d); };
            return p;
        }
        case SpaceKind::ball: {
            cvec d = std::get<BallDir>(xi.payload).xi;
            Path p;
            p.space = space;
            p.length = max_radial_extent();
            p.radius_is_param = true;
            p.limit = ball_boundary(space, d);
            p.eval = [d](double t) {
                double r = std::tanh(0.5 * t);
                cvec out(d.size());
                for (size_t i = 0; i < d.size(); ++i) out[i] = r * d[i];
                return Point(out);
            };
            return p;
        }
        case SpaceKind::real_line: {
            int s = std::get<LineDir>(xi.payload).sign;
            Path p;
            p.space = space;
            p.length = std::numeric_limits<double>::infinity();
            p.radius_is_param = true;
            p.limit = sup_sign(space, {0}, {-s}, {0.0});  // functional sign is -direction
            p.eval = [s](double t) { return Point(s * t); };
            return p;
        }
        case SpaceKind::sup_rn: {
            const SupDir& d = std::get<SupDir>(xi.payload);
            rvec u(static_cast<size_t>(space.dim()), 0.0);
            for (size_t k = 0; k < d.J.size(); ++k)
                u[static_cast<size_t>(d.J[k])] = static_cast<double>(d.signs[k]);
            std::vector<int> fsigns;
            for (int s : d.signs) fsigns.push_back(-s);
            Path p;
            p.space = space;
            p.length = std::numeric_limits<double>::infinity();
            p.radius_is_param = true;
            p.limit = sup_sign(space, d.J, fsigns, std::vector<double>(d.J.size(), 0.0));
            p.eval = [u](double t) {
                rvec out(u.size());
                for (size_t i = 0; i < u.size(); ++i) out[i] = t * u[i];
                return Point(out);
            };
            return p;
        }
        case SpaceKind::product:
            fail(errc::unsupported_space,
                 "product rays require offsets; use product_busemann");
        case SpaceKind::polydisc:
        case SpaceKind::star_graph:
            fail(errc::unsupported_space,
                 std::string("no boundary rays for ") + kind_name(space.kind()));
    }
    fail(errc::bad_argument, "unreachable space kind");
}

}  // namespace horo
