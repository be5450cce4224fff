#include "horo/distance.hpp"

#include <algorithm>
#include <cmath>

namespace horo {

complexd herm_dot(const cvec& z, const cvec& w) {
    complexd s(0.0, 0.0);
    for (size_t i = 0; i < z.size(); ++i) s += z[i] * std::conj(w[i]);
    return s;
}

double norm_sq(const cvec& z) { return herm_dot(z, z).real(); }

namespace {

// Neumaier-compensated accumulator with exact two-products. Used for the
// 1 - |z|^2 and 1 - <z, w> cancellations close to the boundary, where a plain
// subtraction loses up to six digits at the witness radius cap.
struct Acc {
    double s = 0.0, c = 0.0;

    void add(double v) {
        double t = s + v;
        if (std::fabs(s) >= std::fabs(v))
            c += (s - t) + v;
        else
            c += (v - t) + s;
        s = t;
    }
    void add_prod(double x, double y) {  // += x*y, exactly
        double p = x * y;
        add(p);
        add(std::fma(x, y, -p));
    }
    double get() const { return s + c; }
};

}  // namespace

complexd one_minus_zconjw(complexd z, complexd w) {
    Acc re;
    re.add(1.0);
    re.add_prod(-z.real(), w.real());
    re.add_prod(-z.imag(), w.imag());
    // plain rounding keeps the imaginary part an exact negation under z <-> w
    double im = z.real() * w.imag() - z.imag() * w.real();
    return complexd(re.get(), im);
}

complexd one_minus_herm_dot(const cvec& z, const cvec& w) {
    Acc re;
    re.add(1.0);
    double im = 0.0;
    for (size_t i = 0; i < z.size(); ++i) {
        re.add_prod(-z[i].real(), w[i].real());
        re.add_prod(-z[i].imag(), w[i].imag());
        im += z[i].real() * w[i].imag() - z[i].imag() * w[i].real();
    }
    return complexd(re.get(), im);
}

double one_minus_abs_sq(complexd z) { return one_minus_zconjw(z, z).real(); }

double one_minus_norm_sq(const cvec& z) { return one_minus_herm_dot(z, z).real(); }

namespace {

// rho = log((d + n)^2 / ((1 - |z|^2)(1 - |w|^2))) with d = |1 - conj(z) w| and
// n = |w - z|; the identity d^2 - n^2 = (1 - |z|^2)(1 - |w|^2) removes every
// cancelling subtraction, so the kernel stays accurate at extreme radii and is
// exactly zero and exactly symmetric on identical arguments.
double stable_log_form(double Xz, double Xw, complexd one_minus_dot) {
    double D = one_minus_dot.real() * one_minus_dot.real() +
               one_minus_dot.imag() * one_minus_dot.imag();
    double P = Xz * Xw;
    double s = std::sqrt(std::max(0.0, 1.0 - P / D));
    return 2.0 * std::log1p(s) + std::log(D) - std::log(P);
}

}  // namespace

double disc_rho(complexd z, complexd w) {
    return stable_log_form(one_minus_abs_sq(z), one_minus_abs_sq(w), one_minus_zconjw(z, w));
}

double disc_rho_log_form(complexd z, complexd w) {
    double u = std::abs(w - z) / std::abs(1.0 - std::conj(z) * w);
    return std::log((1.0 + u) / (1.0 - u));
}

double disc_rho_atanh_form(complexd z, complexd w) {
    double q = (1.0 - std::norm(w)) * (1.0 - std::norm(z)) / std::norm(1.0 - std::conj(w) * z);
    return 2.0 * std::atanh(std::sqrt(std::max(0.0, 1.0 - q)));
}

double ball_distance(const cvec& z, const cvec& w) {
    return stable_log_form(one_minus_norm_sq(z), one_minus_norm_sq(w), one_minus_herm_dot(z, w));
}

namespace {

double star_distance(const StarPoint& a, const StarPoint& b) {
    if (a.edge == b.edge) return std::fabs(a.offset - b.offset);
    return a.offset + b.offset;  // path through the centre
}

}  // namespace

double distance(const Space& space, const Point& x, const Point& y) {
    validate_point(space, x);
    validate_point(space, y);
    switch (space.kind()) {
        case SpaceKind::real_line:
            return std::fabs(x.scalar() - y.scalar());
        case SpaceKind::sup_rn: {
            const rvec& a = x.vec();
            const rvec& b = y.vec();
            double m = 0.0;
            for (size_t i = 0; i < a.size(); ++i) m = std::max(m, std::fabs(a[i] - b[i]));
            return m;
        }
        case SpaceKind::disc:
            return disc_rho(x.cplx(), y.cplx());
        case SpaceKind::ball:
            return ball_distance(x.cplx_vec(), y.cplx_vec());
        case SpaceKind::polydisc: {
            const cvec& a = x.cplx_vec();
            const cvec& b = y.cplx_vec();
            double m = 0.0;
            for (size_t i = 0; i < a.size(); ++i) m = std::max(m, disc_rho(a[i], b[i]));
            return m;
        }
        case SpaceKind::star_graph:
            return star_distance(x.star(), y.star());
        case SpaceKind::product: {
            const PointTuple& a = x.tuple();
            const PointTuple& b = y.tuple();
            double m = 0.0;
            for (size_t i = 0; i < a.size(); ++i)
                m = std::max(m, distance(space.factors()[i], a[i], b[i]));
            return m;
        }
    }
    fail(errc::bad_argument, "unreachable space kind");
}

}  // namespace horo
