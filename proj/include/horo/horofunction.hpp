#pragma once

#include <optional>
#include <vector>

#include "horo/distance.hpp"
#include "horo/space.hpp"

namespace horo {

// ---------------------------------------------------------------------------
// Horofunction variants
// ---------------------------------------------------------------------------

struct InternalPeak {
    Point y;  // h(x) = d(x, y) - d(basepoint, y)
};
struct DiscBoundary {
    complexd xi;  // h(z) = log(|1 - z conj(xi)|^2 / (1 - |z|^2)), then rebased
};
struct BallBoundary {
    cvec xi;  // h(z) = log(|1 - <z, xi>|^2 / (1 - ||z||^2)), then rebased
};
struct SupSign {
    // Functional form on sup-R^n (or the real line, J = {0}):
    //   h(x) = max_{j in J} sign_j * x_j - alpha_j,  min alpha = 0.
    // Note: the ray realizing this form travels in direction -sign_j.
    std::vector<int> J;      // 0-based, sorted
    std::vector<int> signs;  // functional signs, +-1
    std::vector<double> alpha;
};
struct Horofunction;
struct ProductComposite {
    // h(x) = max_{j in J} factor_j(x_j) - alpha_j,  min alpha = 0.
    std::vector<int> J;  // 0-based, sorted
    std::vector<Horofunction> factors;
    std::vector<double> alpha;
};

struct Horofunction {
    Space space;
    std::variant<InternalPeak, DiscBoundary, BallBoundary, SupSign, ProductComposite> form;
    // Evaluation subtracts the canonical form's value here, so h(basepoint) = 0.
    Point basepoint;
};

// Constructors validate direction norms, gauge (min alpha = 0 within 1e-12) and
// space shapes. Default basepoint is the space basepoint.
Horofunction internal_peak(const Space& space, Point y);
Horofunction disc_boundary(const Space& space, complexd xi);
Horofunction ball_boundary(const Space& space, cvec xi);
Horofunction sup_sign(const Space& space, std::vector<int> J, std::vector<int> signs,
                      std::vector<double> alpha);
Horofunction product_composite(const Space& space, std::vector<int> J,
                               std::vector<Horofunction> factors, std::vector<double> alpha);

double evaluate(const Horofunction& h, const Point& x);

// h |-> h - h(y0): same function family, renormalised at a new interior point.
Horofunction rebase(const Horofunction& h, Point new_basepoint);

bool horoball_contains(const Horofunction& h, double r, const Point& x);

// ---------------------------------------------------------------------------
// Finite-data limit estimation
// ---------------------------------------------------------------------------

struct LimitEstimate {
    double value = 0.0;        // last partial value
    double tail_spread = 0.0;  // max - min over the last `window` partial values
    bool converged = false;    // tail_spread <= tol
    int n_used = 0;
    int window = 0;
};

// Partial values v_n = d(z, y^n) - d(b, y^n); reports the stabilisation of the
// tail. Makes no claim that the true limit exists.
LimitEstimate horofunction_limit_estimate(const Space& space, const std::vector<Point>& seq,
                                          const Point& z, double tol = 1e-6, int window = 5);

// ---------------------------------------------------------------------------
// Product decomposition
// ---------------------------------------------------------------------------

struct Decomposition {
    std::vector<int> J;         // factors with stabilised finite offset, 0-based
    std::vector<double> alpha;  // gauged so min over J is 0
    std::vector<int> excluded;  // factors whose offset exceeded the cutoff
    std::vector<int> tail_indices;
    // Per j in J: limit estimates of the factor horofunction on a probe grid.
    std::vector<std::vector<Point>> probes;
    std::vector<std::vector<LimitEstimate>> factor_estimates;
};

// Default escape cutoff. Note that disc/ball factor witnesses are capped at
// coordinate radius 1 - 1e-10 (metric radius ~23.7), so callers working over
// those factors must pass a smaller cutoff for the escape branch to be
// observable on representable data.
inline constexpr double kDefaultEscapeCutoff = 30.0;

Decomposition decompose_product_horofunction(const Space& space, const std::vector<Point>& seq,
                                             double cutoff = kDefaultEscapeCutoff,
                                             double tol = 1e-6, int window = 5);

// Deterministic interior probe points used for factor limit estimates.
std::vector<Point> default_probes(const Space& space);

}  // namespace horo
