#include "horo/space.hpp"

#include <cmath>

#include "horo/distance.hpp"

namespace horo {

const char* errc_name(errc c) {
    switch (c) {
        case errc::dimension_mismatch: return "DimensionMismatch";
        case errc::out_of_domain: return "OutOfDomain";
        case errc::malformed_star_coordinate: return "MalformedStarCoordinate";
        case errc::unsupported_space: return "UnsupportedSpace";
        case errc::monotonicity_violation: return "MonotonicityViolation";
        case errc::radius_unreachable: return "RadiusUnreachable";
        case errc::gauge_violation: return "GaugeViolation";
        case errc::not_isometric: return "NotIsometric";
        case errc::not_a_boundary_horofunction: return "NotABoundaryHorofunction";
        case errc::not_escaping: return "NotEscaping";
        case errc::undecided: return "Undecided";
        case errc::empty_input: return "EmptyInput";
        case errc::bad_argument: return "BadArgument";
        case errc::parse_error: return "ParseError";
    }
    return "Unknown";
}

const char* kind_name(SpaceKind k) {
    switch (k) {
        case SpaceKind::real_line: return "line";
        case SpaceKind::sup_rn: return "sup_rn";
        case SpaceKind::disc: return "disc";
        case SpaceKind::ball: return "ball";
        case SpaceKind::polydisc: return "polydisc";
        case SpaceKind::star_graph: return "star";
        case SpaceKind::product: return "product";
    }
    return "unknown";
}

// ---------------------------------------------------------------------------
// Point accessors
// ---------------------------------------------------------------------------

namespace {
[[noreturn]] void wrong_payload(const char* want) {
    fail(errc::dimension_mismatch, std::string("point payload is not a ") + want);
}
}  // namespace

double Point::scalar() const {
    if (auto* p = std::get_if<double>(&payload)) return *p;
    wrong_payload("real scalar");
}
const rvec& Point::vec() const {
    if (auto* p = std::get_if<rvec>(&payload)) return *p;
    wrong_payload("real vector");
}
complexd Point::cplx() const {
    if (auto* p = std::get_if<complexd>(&payload)) return *p;
    wrong_payload("complex scalar");
}
const cvec& Point::cplx_vec() const {
    if (auto* p = std::get_if<cvec>(&payload)) return *p;
    wrong_payload("complex vector");
}
const StarPoint& Point::star() const {
    if (auto* p = std::get_if<StarPoint>(&payload)) return *p;
    wrong_payload("star coordinate");
}
const PointTuple& Point::tuple() const {
    if (auto* p = std::get_if<PointTuple>(&payload)) return *p;
    wrong_payload("tuple");
}

// ---------------------------------------------------------------------------
// Space construction
// ---------------------------------------------------------------------------

Space Space::real_line() {
    Space s(SpaceKind::real_line, 1);
    s.basepoint_ = Point(0.0);
    return s;
}

Space Space::sup_rn(int n) {
    if (n < 1) fail(errc::bad_argument, "sup_rn requires n >= 1");
    Space s(SpaceKind::sup_rn, n);
    s.basepoint_ = Point(rvec(static_cast<size_t>(n), 0.0));
    return s;
}

Space Space::disc() {
    Space s(SpaceKind::disc, 1);
    s.basepoint_ = Point(complexd(0.0, 0.0));
    return s;
}

Space Space::ball(int n) {
    if (n < 1) fail(errc::bad_argument, "ball requires n >= 1");
    Space s(SpaceKind::ball, n);
    s.basepoint_ = Point(cvec(static_cast<size_t>(n), complexd(0.0, 0.0)));
    return s;
}

Space Space::polydisc(int n) {
    if (n < 1) fail(errc::bad_argument, "polydisc requires n >= 1");
    Space s(SpaceKind::polydisc, n);
    s.basepoint_ = Point(cvec(static_cast<size_t>(n), complexd(0.0, 0.0)));
    return s;
}

Space Space::star_graph() {
    Space s(SpaceKind::star_graph, 1);
    s.basepoint_ = Point(StarPoint{1, 0.0});
    return s;
}

Space Space::product(std::vector<Space> factors) {
    if (factors.empty()) fail(errc::bad_argument, "product requires at least one factor");
    Space s(SpaceKind::product, 0);
    // Nested products are flattened; the basepoint is the tuple of factor
    // basepoints.
    for (auto& f : factors) {
        if (f.kind() == SpaceKind::product) {
            for (auto& g : f.factors_) s.factors_.push_back(g);
        } else {
            s.factors_.push_back(f);
        }
    }
    s.dim_ = static_cast<int>(s.factors_.size());
    PointTuple bp;
    bp.reserve(s.factors_.size());
    for (auto& f : s.factors_) bp.push_back(f.basepoint());
    s.basepoint_ = Point(std::move(bp));
    return s;
}

Space Space::with_basepoint(Point b) const {
    Space s = *this;
    validate_point(s, b);
    s.basepoint_ = std::move(b);
    return s;
}

bool Space::same_shape(const Space& other) const {
    if (kind_ != other.kind_ || dim_ != other.dim_) return false;
    if (kind_ == SpaceKind::product) {
        for (size_t i = 0; i < factors_.size(); ++i)
            if (!factors_[i].same_shape(other.factors_[i])) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

void validate_point(const Space& space, const Point& x) {
    switch (space.kind()) {
        case SpaceKind::real_line: {
            double v = x.scalar();
            if (!std::isfinite(v)) fail(errc::out_of_domain, "non-finite real coordinate");
            return;
        }
        case SpaceKind::sup_rn: {
            const rvec& v = x.vec();
            if (static_cast<int>(v.size()) != space.dim())
                fail(errc::dimension_mismatch, "sup_rn point dimension");
            for (double c : v)
                if (!std::isfinite(c)) fail(errc::out_of_domain, "non-finite coordinate");
            return;
        }
        case SpaceKind::disc: {
            complexd z = x.cplx();
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
                fail(errc::out_of_domain, "non-finite disc coordinate");
            if (std::abs(z) >= 1.0 - kInteriorMargin)
                fail(errc::out_of_domain, "disc point with |z| >= 1 - 1e-15");
            return;
        }
        case SpaceKind::ball: {
            const cvec& z = x.cplx_vec();
            if (static_cast<int>(z.size()) != space.dim())
                fail(errc::dimension_mismatch, "ball point dimension");
            for (auto& c : z)
                if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
                    fail(errc::out_of_domain, "non-finite coordinate");
            if (std::sqrt(norm_sq(z)) >= 1.0 - kInteriorMargin)
                fail(errc::out_of_domain, "ball point with ||z|| >= 1 - 1e-15");
            return;
        }
        case SpaceKind::polydisc: {
            const cvec& z = x.cplx_vec();
            if (static_cast<int>(z.size()) != space.dim())
                fail(errc::dimension_mismatch, "polydisc point dimension");
            for (auto& c : z) {
                if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
                    fail(errc::out_of_domain, "non-finite coordinate");
                if (std::abs(c) >= 1.0 - kInteriorMargin)
                    fail(errc::out_of_domain, "polydisc coordinate with |z_i| >= 1 - 1e-15");
            }
            return;
        }
        case SpaceKind::star_graph: {
            const StarPoint& s = x.star();
            if (s.edge < 1) fail(errc::malformed_star_coordinate, "edge index must be >= 1");
            if (!std::isfinite(s.offset) || s.offset < 0.0 ||
                s.offset > static_cast<double>(s.edge))
                fail(errc::malformed_star_coordinate, "offset outside [0, edge length]");
            return;
        }
        case SpaceKind::product: {
            const PointTuple& t = x.tuple();
            if (static_cast<int>(t.size()) != space.dim())
                fail(errc::dimension_mismatch, "product point arity");
            for (size_t i = 0; i < t.size(); ++i) validate_point(space.factors()[i], t[i]);
            return;
        }
    }
}

void validate_boundary(const Space& space, const BoundaryPoint& xi) {
    switch (space.kind()) {
        case SpaceKind::real_line: {
            auto* d = std::get_if<LineDir>(&xi.payload);
            if (!d) fail(errc::dimension_mismatch, "real line expects a sign direction");
            if (d->sign != 1 && d->sign != -1) fail(errc::bad_argument, "sign must be +-1");
            return;
        }
        case SpaceKind::sup_rn: {
            auto* d = std::get_if<SupDir>(&xi.payload);
            if (!d) fail(errc::dimension_mismatch, "sup_rn expects sign/direction data");
            if (d->J.empty()) fail(errc::bad_argument, "J must be non-empty");
            if (d->J.size() != d->signs.size())
                fail(errc::dimension_mismatch, "J and signs must align");
            int prev = -1;
            for (size_t k = 0; k < d->J.size(); ++k) {
                if (d->J[k] <= prev || d->J[k] >= space.dim())
                    fail(errc::bad_argument, "J must be sorted, distinct, within dimension");
                prev = d->J[k];
                if (d->signs[k] != 1 && d->signs[k] != -1)
                    fail(errc::bad_argument, "signs must be +-1");
            }
            return;
        }
        case SpaceKind::disc: {
            auto* d = std::get_if<DiscDir>(&xi.payload);
            if (!d) fail(errc::dimension_mismatch, "disc expects a unit complex direction");
            if (std::abs(std::abs(d->xi) - 1.0) > kBoundaryTol)
                fail(errc::out_of_domain, "|xi| must be 1 within 1e-12");
            return;
        }
        case SpaceKind::ball: {
            auto* d = std::get_if<BallDir>(&xi.payload);
            if (!d) fail(errc::dimension_mismatch, "ball expects a unit vector direction");
            if (static_cast<int>(d->xi.size()) != space.dim())
                fail(errc::dimension_mismatch, "boundary direction dimension");
            if (std::abs(std::sqrt(norm_sq(d->xi)) - 1.0) > kBoundaryTol)
                fail(errc::out_of_domain, "||xi|| must be 1 within 1e-12");
            return;
        }
        case SpaceKind::product: {
            auto* d = std::get_if<ProductDir>(&xi.payload);
            if (!d) fail(errc::dimension_mismatch, "product expects per-factor boundary data");
            if (d->J.empty()) fail(errc::bad_argument, "J must be non-empty");
            if (d->J.size() != d->factors.size())
                fail(errc::dimension_mismatch, "J and factors must align");
            int prev = -1;
            for (size_t k = 0; k < d->J.size(); ++k) {
                if (d->J[k] <= prev || d->J[k] >= space.dim())
                    fail(errc::bad_argument, "J must be sorted, distinct, within arity");
                prev = d->J[k];
                validate_boundary(space.factors()[d->J[k]], d->factors[k]);
            }
            return;
        }
        case SpaceKind::polydisc:
        case SpaceKind::star_graph:
            fail(errc::unsupported_space,
                 std::string("no boundary directions for ") + kind_name(space.kind()));
    }
}

}  // namespace horo
