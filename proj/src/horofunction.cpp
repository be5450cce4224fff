#include "horo/horofunction.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace horo {

namespace {

void check_sorted_subset(const std::vector<int>& J, int dim) {
    if (J.empty()) fail(errc::bad_argument, "J must be non-empty");
    int prev = -1;
    for (int j : J) {
        if (j <= prev || j < 0 || j >= dim)
            fail(errc::bad_argument, "J must be sorted, distinct, within dimension");
        prev = j;
    }
}

void check_gauge(const std::vector<double>& alpha) {
    if (alpha.empty()) fail(errc::bad_argument, "alpha must be non-empty");
    double lo = *std::min_element(alpha.begin(), alpha.end());
    if (std::fabs(lo) > 1e-12)
        fail(errc::gauge_violation, "min over J of alpha must be 0 within 1e-12");
    for (double a : alpha)
        if (a < -1e-12) fail(errc::gauge_violation, "alpha must be nonnegative");
}

bool is_boundary_form(const Horofunction& h) {
    return !std::holds_alternative<InternalPeak>(h.form);
}

// Value of the form normalised at the canonical basepoint (origin / centre).
// Evaluation subtracts the same expression at h.basepoint, which implements
// rebasing for free.
double canonical_value(const Horofunction& h, const Point& x);

double canonical_value_form(const Space& space, const InternalPeak& f, const Point& x) {
    return distance(space, x, f.y);
}

double canonical_value_form(const Space&, const DiscBoundary& f, const Point& x) {
    // log(|1 - z conj(xi)|^2 / (1 - |z|^2)), compensated near the boundary
    complexd z = x.cplx();
    complexd c = one_minus_zconjw(z, f.xi);
    double D = c.real() * c.real() + c.imag() * c.imag();
    return std::log(D) - std::log(one_minus_abs_sq(z));
}

double canonical_value_form(const Space&, const BallBoundary& f, const Point& x) {
    // log(|1 - <z, xi>|^2 / (1 - ||z||^2)), compensated near the boundary
    const cvec& z = x.cplx_vec();
    complexd c = one_minus_herm_dot(z, f.xi);
    double D = c.real() * c.real() + c.imag() * c.imag();
    return std::log(D) - std::log(one_minus_norm_sq(z));
}

double coordinate(const Point& x, int j, SpaceKind kind) {
    if (kind == SpaceKind::real_line) return x.scalar();
    return x.vec()[static_cast<size_t>(j)];
}

double canonical_value_form(const Space& space, const SupSign& f, const Point& x) {
    double best = -std::numeric_limits<double>::infinity();
    for (size_t k = 0; k < f.J.size(); ++k) {
        double v = f.signs[k] * coordinate(x, f.J[k], space.kind()) - f.alpha[k];
        best = std::max(best, v);
    }
    return best;
}

double canonical_value_form(const Space&, const ProductComposite& f, const Point& x) {
    // Factor values are normalised at the factor basepoints, so the composite
    // realises max_j h_j(x_j) - alpha_j with h_j(b_j) = 0.
    const PointTuple& t = x.tuple();
    double best = -std::numeric_limits<double>::infinity();
    for (size_t k = 0; k < f.J.size(); ++k) {
        const Horofunction& fh = f.factors[k];
        double hv = canonical_value(fh, t[static_cast<size_t>(f.J[k])]) -
                    canonical_value(fh, fh.basepoint);
        best = std::max(best, hv - f.alpha[k]);
    }
    return best;
}

double canonical_value(const Horofunction& h, const Point& x) {
    return std::visit([&](const auto& f) { return canonical_value_form(h.space, f, x); }, h.form);
}

}  // namespace

// ---------------------------------------------------------------------------
// Constructors
// ---------------------------------------------------------------------------

Horofunction internal_peak(const Space& space, Point y) {
    validate_point(space, y);
    return Horofunction{space, InternalPeak{std::move(y)}, space.basepoint()};
}

Horofunction disc_boundary(const Space& space, complexd xi) {
    if (space.kind() != SpaceKind::disc)
        fail(errc::unsupported_space, "disc_boundary requires a disc space");
    validate_boundary(space, BoundaryPoint{DiscDir{xi}});
    return Horofunction{space, DiscBoundary{xi}, space.basepoint()};
}

Horofunction ball_boundary(const Space& space, cvec xi) {
    if (space.kind() != SpaceKind::ball)
        fail(errc::unsupported_space, "ball_boundary requires a ball space");
    validate_boundary(space, BoundaryPoint{BallDir{xi}});
    return Horofunction{space, BallBoundary{std::move(xi)}, space.basepoint()};
}

Horofunction sup_sign(const Space& space, std::vector<int> J, std::vector<int> signs,
                      std::vector<double> alpha) {
    if (space.kind() != SpaceKind::sup_rn && space.kind() != SpaceKind::real_line)
        fail(errc::unsupported_space, "sup_sign requires sup_rn or the real line");
    check_sorted_subset(J, space.dim());
    if (signs.size() != J.size() || alpha.size() != J.size())
        fail(errc::dimension_mismatch, "J, signs, alpha must align");
    for (int s : signs)
        if (s != 1 && s != -1) fail(errc::bad_argument, "signs must be +-1");
    check_gauge(alpha);
    return Horofunction{space, SupSign{std::move(J), std::move(signs), std::move(alpha)},
                        space.basepoint()};
}

Horofunction product_composite(const Space& space, std::vector<int> J,
                               std::vector<Horofunction> factors, std::vector<double> alpha) {
    if (space.kind() != SpaceKind::product)
        fail(errc::unsupported_space, "product_composite requires a product space");
    check_sorted_subset(J, space.dim());
    if (factors.size() != J.size() || alpha.size() != J.size())
        fail(errc::dimension_mismatch, "J, factors, alpha must align");
    for (size_t k = 0; k < J.size(); ++k) {
        if (!factors[k].space.same_shape(space.factors()[static_cast<size_t>(J[k])]))
            fail(errc::dimension_mismatch, "factor horofunction space mismatch");
        if (!is_boundary_form(factors[k]))
            fail(errc::not_a_boundary_horofunction,
                 "composite factors must be boundary horofunctions");
    }
    check_gauge(alpha);
    return Horofunction{space, ProductComposite{std::move(J), std::move(factors), std::move(alpha)},
                        space.basepoint()};
}

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

double evaluate(const Horofunction& h, const Point& x) {
    validate_point(h.space, x);
    return canonical_value(h, x) - canonical_value(h, h.basepoint);
}

Horofunction rebase(const Horofunction& h, Point new_basepoint) {
    validate_point(h.space, new_basepoint);
    Horofunction out = h;
    out.basepoint = std::move(new_basepoint);
    return out;
}

bool horoball_contains(const Horofunction& h, double r, const Point& x) {
    return evaluate(h, x) < r;
}

// ---------------------------------------------------------------------------
// Limit estimation
// ---------------------------------------------------------------------------

LimitEstimate horofunction_limit_estimate(const Space& space, const std::vector<Point>& seq,
                                          const Point& z, double tol, int window) {
    if (seq.empty()) fail(errc::empty_input, "sequence must be non-empty");
    if (window < 2) fail(errc::bad_argument, "window must be >= 2");
    const Point& b = space.basepoint();
    std::vector<double> v;
    v.reserve(seq.size());
    for (const Point& y : seq) v.push_back(distance(space, z, y) - distance(space, b, y));
    int w = std::min<int>(window, static_cast<int>(v.size()));
    double lo = v.back(), hi = v.back();
    for (size_t i = v.size() - static_cast<size_t>(w); i < v.size(); ++i) {
        lo = std::min(lo, v[i]);
        hi = std::max(hi, v[i]);
    }
    LimitEstimate e;
    e.value = v.back();
    e.tail_spread = hi - lo;
    e.converged = e.tail_spread <= tol;
    e.n_used = static_cast<int>(v.size());
    e.window = w;
    return e;
}

// ---------------------------------------------------------------------------
// Product decomposition
// ---------------------------------------------------------------------------

std::vector<Point> default_probes(const Space& space) {
    switch (space.kind()) {
        case SpaceKind::real_line:
            return {Point(1.5), Point(-2.25), Point(0.75)};
        case SpaceKind::sup_rn: {
            std::vector<Point> out;
            rvec a(static_cast<size_t>(space.dim()), 0.5);
            rvec b(static_cast<size_t>(space.dim()), -1.25);
            rvec c(static_cast<size_t>(space.dim()), 0.0);
            c[0] = 2.0;
            out.emplace_back(a);
            out.emplace_back(b);
            out.emplace_back(c);
            return out;
        }
        case SpaceKind::disc:
            return {Point(complexd(0.3, 0.0)), Point(complexd(-0.2, 0.35)),
                    Point(complexd(0.1, -0.45))};
        case SpaceKind::ball:
        case SpaceKind::polydisc: {
            std::vector<Point> out;
            cvec a(static_cast<size_t>(space.dim()), complexd(0.0, 0.0));
            a[0] = complexd(0.4, 0.1);
            cvec b(static_cast<size_t>(space.dim()), complexd(0.15, -0.2));
            cvec c(static_cast<size_t>(space.dim()), complexd(-0.25, 0.0));
            out.emplace_back(a);
            out.emplace_back(b);
            out.emplace_back(c);
            return out;
        }
        case SpaceKind::star_graph:
            return {Point(StarPoint{1, 0.5}), Point(StarPoint{2, 1.25})};
        case SpaceKind::product: {
            PointTuple a, b;
            for (const Space& f : space.factors()) {
                auto p = default_probes(f);
                a.push_back(p[0]);
                b.push_back(p[1]);
            }
            return {Point(a), Point(b)};
        }
    }
    fail(errc::bad_argument, "unreachable space kind");
}

Decomposition decompose_product_horofunction(const Space& space, const std::vector<Point>& seq,
                                             double cutoff, double tol, int window) {
    if (space.kind() != SpaceKind::product)
        fail(errc::unsupported_space, "decomposition requires a product space");
    if (seq.size() < 2) fail(errc::empty_input, "need at least two points");
    if (window < 2) fail(errc::bad_argument, "window must be >= 2");

    const int p = space.dim();
    const Point& b = space.basepoint();
    const PointTuple& bt = b.tuple();
    const int n = static_cast<int>(seq.size());

    std::vector<double> dinf(static_cast<size_t>(n));
    std::vector<std::vector<double>> alpha_n(static_cast<size_t>(p),
                                             std::vector<double>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i) {
        validate_point(space, seq[static_cast<size_t>(i)]);
        const PointTuple& yt = seq[static_cast<size_t>(i)].tuple();
        double m = 0.0;
        std::vector<double> dj(static_cast<size_t>(p));
        for (int j = 0; j < p; ++j) {
            dj[static_cast<size_t>(j)] = distance(space.factors()[static_cast<size_t>(j)],
                                                  bt[static_cast<size_t>(j)],
                                                  yt[static_cast<size_t>(j)]);
            m = std::max(m, dj[static_cast<size_t>(j)]);
        }
        dinf[static_cast<size_t>(i)] = m;
        for (int j = 0; j < p; ++j)
            alpha_n[static_cast<size_t>(j)][static_cast<size_t>(i)] =
                m - dj[static_cast<size_t>(j)];
    }

    // The escape precondition is checked on the finite data.
    if (dinf.back() <= cutoff)
        fail(errc::not_escaping, "d_inf(b, y^n) does not exceed the cutoff on the given data");

    const int w = std::min<int>(window, n);
    Decomposition out;
    for (int i = n - w; i < n; ++i) out.tail_indices.push_back(i);

    for (int j = 0; j < p; ++j) {
        const auto& a = alpha_n[static_cast<size_t>(j)];
        double lo = a.back(), hi = a.back();
        for (int i = n - w; i < n; ++i) {
            lo = std::min(lo, a[static_cast<size_t>(i)]);
            hi = std::max(hi, a[static_cast<size_t>(i)]);
        }
        double last = a.back();
        if (hi - lo <= tol && last <= cutoff) {
            out.J.push_back(j);
            out.alpha.push_back(last);
        } else if (last > cutoff) {
            out.excluded.push_back(j);
        } else {
            std::ostringstream msg;
            msg << "offset of factor " << (j + 1) << " neither stabilised (spread " << (hi - lo)
                << " > tol) nor beyond the cutoff";
            fail(errc::undecided, msg.str());
        }
    }
    if (out.J.empty()) fail(errc::undecided, "no factor offset stabilised below the cutoff");

    for (double a : out.alpha)
        if (a < -1e-12) fail(errc::gauge_violation, "negative offset before renormalisation");
    double lo = *std::min_element(out.alpha.begin(), out.alpha.end());
    for (double& a : out.alpha) a -= lo;

    // Factor horofunction estimates on the probe grid, over the tail window.
    for (int j : out.J) {
        const Space& fs = space.factors()[static_cast<size_t>(j)];
        std::vector<Point> fseq;
        for (int i : out.tail_indices)
            fseq.push_back(seq[static_cast<size_t>(i)].tuple()[static_cast<size_t>(j)]);
        auto probes = default_probes(fs);
        std::vector<LimitEstimate> est;
        for (const Point& z : probes)
            est.push_back(horofunction_limit_estimate(fs, fseq, z, tol, w));
        out.probes.push_back(std::move(probes));
        out.factor_estimates.push_back(std::move(est));
    }
    return out;
}

}  // namespace horo
