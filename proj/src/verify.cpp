#include "horo/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>

#include "horo/detour.hpp"
#include "horo/sampling.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace horo {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Runs kernel(i) for i in [0, n). The OpenMP path is the production runner;
// the serial loop is the reference the equivalence test and the benchmark
// compare against. Kernels write per-index slots only, so both orders merge
// to identical tables.
template <class K>
void for_samples(long n, bool parallel, K&& kernel) {
    if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8)
        for (long i = 0; i < n; ++i) kernel(i);
        return;
#endif
    }
    for (long i = 0; i < n; ++i) kernel(i);
}

// Residual slot: kernels record the worst deviation they saw; hard failures
// (wrong branch taken, exception) poison the slot with +inf.
struct Slots {
    std::vector<double> residual;
    std::vector<std::string> err;

    explicit Slots(long n) : residual(static_cast<size_t>(n), 0.0), err(static_cast<size_t>(n)) {}

    double worst() const {
        double w = 0.0;
        for (double r : residual) w = std::max(w, r);
        return w;
    }
    std::string first_error() const {
        for (size_t i = 0; i < err.size(); ++i)
            if (!err[i].empty()) return err[i];
        return {};
    }
};

template <class K>
void run_kernel(Slots& slots, long i, K&& body) {
    try {
        slots.residual[static_cast<size_t>(i)] = body();
    } catch (const std::exception& e) {
        slots.residual[static_cast<size_t>(i)] = kInf;
        slots.err[static_cast<size_t>(i)] = e.what();
    }
}

SplitMix64 sample_rng(const VerifyOptions& opt, int suite, long i) {
    return SplitMix64(SplitMix64::mix(opt.seed ^ (0x5eedULL * static_cast<std::uint64_t>(suite + 1)),
                                      static_cast<std::uint64_t>(i)));
}

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

SuiteResult finish(SuiteResult r, const Slots& slots, double tol, double seconds, double budget) {
    r.worst = slots.worst();
    r.tolerance = tol;
    r.seconds = seconds;
    r.budget_seconds = budget;
    r.pass = r.worst <= tol && (budget <= 0.0 || seconds < budget);
    std::string err = slots.first_error();
    if (!err.empty()) r.note = (r.note.empty() ? "" : r.note + "; ") + err;
    return r;
}

// ---------------------------------------------------------------------------
// 1. Metric axioms
// ---------------------------------------------------------------------------

std::vector<Space> axiom_spaces() {
    return {Space::real_line(),
            Space::sup_rn(3),
            Space::disc(),
            Space::ball(2),
            Space::polydisc(2),
            Space::star_graph(),
            Space::product({Space::disc(), Space::ball(2)})};
}

SuiteResult suite_metric_axioms(const VerifyOptions& opt) {
    Timer timer;
    const auto spaces = axiom_spaces();
    const long per = 10000;
    const long n = per * static_cast<long>(spaces.size());
    Slots slots(n);
    for_samples(n, opt.parallel, [&](long i) {
        run_kernel(slots, i, [&]() -> double {
            const Space& sp = spaces[static_cast<size_t>(i / per)];
            SplitMix64 g = sample_rng(opt, 1, i);
            Point x = sample_point(sp, g), y = sample_point(sp, g), z = sample_point(sp, g);
            double dxy = distance(sp, x, y);
            double dyx = distance(sp, y, x);
            if (dxy != dyx) return kInf;  // symmetry must be exact
            if (distance(sp, x, x) != 0.0) return kInf;
            if (dxy < 0.0) return kInf;
            double tri = distance(sp, x, z) - dxy - distance(sp, y, z);
            return std::max(0.0, tri);
        });
    });
    return finish({"metric-axioms", "metric axioms (symmetry exact, triangle <= 1e-12)", {}, 0, 0,
                   n, 0, 0, {}},
                  slots, 1e-12, timer.seconds(), 2.0);
}

// ---------------------------------------------------------------------------
// 2. Formula cross-checks
// ---------------------------------------------------------------------------

SuiteResult suite_formula_cross_checks(const VerifyOptions& opt) {
    Timer timer;
    const long n = 10000;
    const Space disc = Space::disc();
    const Space ball2 = Space::ball(2);
    const Space prod = Space::product({Space::disc(), Space::ball(2)});
    Slots slots(n);
    for_samples(n, opt.parallel, [&](long i) {
        run_kernel(slots, i, [&]() -> double {
            SplitMix64 g = sample_rng(opt, 2, i);
            // (a) the two textbook hyperbolic-distance forms, and the
            //     production kernel against either
            complexd z = sample_point(disc, g).cplx();
            complexd w = sample_point(disc, g).cplx();
            double r = std::fabs(disc_rho_log_form(z, w) - disc_rho_atanh_form(z, w));
            r = std::max(r, std::fabs(disc_rho(z, w) - disc_rho_log_form(z, w)));
            // (b) ball restricted to a complex line through 0 vs the disc
            cvec u = sample_unit_cvec(2, g);
            complexd lam = sample_point(disc, g).cplx();
            complexd mu = sample_point(disc, g).cplx();
            cvec zu(2), wu(2);
            for (int q = 0; q < 2; ++q) {
                zu[static_cast<size_t>(q)] = lam * u[static_cast<size_t>(q)];
                wu[static_cast<size_t>(q)] = mu * u[static_cast<size_t>(q)];
            }
            r = std::max(r, std::fabs(ball_distance(zu, wu) - disc_rho(lam, mu)));
            // (c) product distance is exactly the max of the factors
            Point px = sample_point(prod, g), py = sample_point(prod, g);
            double dp = distance(prod, px, py);
            double dmax = std::max(distance(disc, px.tuple()[0], py.tuple()[0]),
                                   distance(ball2, px.tuple()[1], py.tuple()[1]));
            if (dp != dmax) return kInf;
            return r;
        });
    });
    return finish({"formula-cross-checks",
                   "rho forms agree, ball|line = disc, product = max (exact)", {}, 0, 0, n, 0, 0,
                   {}},
                  slots, 1e-12, timer.seconds(), 0.0);
}

// ---------------------------------------------------------------------------
// 3. Boundary limit law on the ball
// ---------------------------------------------------------------------------

SuiteResult suite_hor_limit_law(const VerifyOptions& opt) {
    Timer timer;
    const long n = 100;
    const Space ball2 = Space::ball(2);
    Slots slots(n);
    for_samples(n, opt.parallel, [&](long i) {
        run_kernel(slots, i, [&]() -> double {
            SplitMix64 g = sample_rng(opt, 3, i);
            cvec xi = sample_unit_cvec(2, g);
            Point z = sample_point(ball2, g, 0.5);
            std::vector<Point> seq;
            for (int k = 1; k <= 7; ++k) {
                double r = 1.0 - std::pow(10.0, -k);
                cvec y(2);
                for (int q = 0; q < 2; ++q) y[static_cast<size_t>(q)] = r * xi[static_cast<size_t>(q)];
                seq.emplace_back(y);
            }
            LimitEstimate e = horofunction_limit_estimate(ball2, seq, z);
            double closed = evaluate(ball_boundary(ball2, xi), z);
            return std::fabs(e.value - closed);
        });
    });
    return finish({"hor-limit-law", "h_{(1-10^-k)xi}(z) -> closed boundary form", {}, 0, 0, n, 0,
                   0, {}},
                  slots, 1e-6, timer.seconds(), 1.0);
}

// ---------------------------------------------------------------------------
// 4. Busemann ray identity
// ---------------------------------------------------------------------------

SuiteResult suite_busemann_ray_identity(const VerifyOptions& opt) {
    Timer timer;
    const long n = 20;
    const Space ball2 = Space::ball(2);
    Slots slots(n);
    std::vector<double> within(static_cast<size_t>(n), 0.0);  // largest t still inside tolerance
    for_samples(n, opt.parallel, [&](long i) {
        run_kernel(slots, i, [&]() -> double {
            SplitMix64 g = sample_rng(opt, 4, i);
            cvec xi = sample_unit_cvec(2, g);
            Horofunction h = ball_boundary(ball2, xi);
            Path ray = boundary_ray(ball2, BoundaryPoint{BallDir{xi}});
            double worst = 0.0, ok_t = 0.0;
            for (int k = 0; k <= 40; ++k) {
                double t = 0.5 * k;
                double dev = std::fabs(evaluate(h, ray.at(t)) + t);
                worst = std::max(worst, dev);
                if (worst <= 1e-9) ok_t = t;
            }
            within[static_cast<size_t>(i)] = ok_t;
            return worst;
        });
    });
    double min_ok = kInf;
    for (double t : within) min_ok = std::min(min_ok, t);
    SuiteResult r{"busemann-ray-identity", "h_xi(gamma_xi(t)) = -t on t in {0, 0.5, ..., 20}", {},
                  0, 0, n, 0, 0, {}};
    char buf[128];
    std::snprintf(buf, sizeof buf, "identity held to 1e-9 up to t = %.1f on every ray", min_ok);
    r.note = buf;
    return finish(std::move(r), slots, 1e-9, timer.seconds(), 0.0);
}

// ---------------------------------------------------------------------------
// 5 & 6. Product construction round-trip and witness quality
// ---------------------------------------------------------------------------

struct DecompCase {
    Space space;
    std::vector<int> J;
    std::vector<double> alpha;  // aligned with J, min = 0
    WitnessedBusemann wb;
};

DecompCase make_decomp_case(const VerifyOptions& opt, int suite, long i, int n_max) {
    SplitMix64 g = sample_rng(opt, suite, i);
    Space space = [&]() {
        switch (i % 4) {
            case 0: return Space::product({Space::disc(), Space::disc()});
            case 1: return Space::product({Space::disc(), Space::disc(), Space::disc()});
            case 2:
                return Space::product(
                    {Space::disc(), Space::disc(), Space::disc(), Space::disc()});
            default: return Space::product({Space::ball(2), Space::disc()});
        }
    }();
    const int p = space.dim();
    std::vector<int> J;
    for (int j = 0; j < p; ++j)
        if (g.unit() < 0.6) J.push_back(j);
    if (J.empty()) J.push_back(g.uniform_int(0, p - 1));

    std::vector<double> alpha;
    for (size_t k = 0; k < J.size(); ++k) alpha.push_back(g.range(0.0, 3.0));
    double lo = *std::min_element(alpha.begin(), alpha.end());
    for (double& a : alpha) a -= lo;

    std::vector<std::optional<Path>> rays(static_cast<size_t>(p));
    for (int j : J) {
        const Space& fs = space.factors()[static_cast<size_t>(j)];
        if (fs.kind() == SpaceKind::disc)
            rays[static_cast<size_t>(j)] =
                boundary_ray(fs, BoundaryPoint{DiscDir{sample_unit_complex(g)}});
        else
            rays[static_cast<size_t>(j)] =
                boundary_ray(fs, BoundaryPoint{BallDir{sample_unit_cvec(fs.dim(), g)}});
    }
    WitnessedBusemann wb = product_busemann(space, rays, alpha, n_max);
    return DecompCase{std::move(space), std::move(J), std::move(alpha), std::move(wb)};
}

SuiteResult suite_decomposition_roundtrip(const VerifyOptions& opt) {
    Timer timer;
    const long n = 50;
    Slots slots(n);
    for_samples(n, opt.parallel, [&](long i) {
        run_kernel(slots, i, [&]() -> double {
            DecompCase c = make_decomp_case(opt, 5, i, 15);
            Decomposition d = decompose_product_horofunction(c.space, c.wb.witness, 13.0, 1e-6);
            if (d.J != c.J) return kInf;
            double r = 0.0;
            for (size_t k = 0; k < d.alpha.size(); ++k)
                r = std::max(r, std::fabs(d.alpha[k] - c.alpha[k]));
            return r;
        });
    });
    return finish({"decomposition-roundtrip",
                   "decompose recovers J exactly and alpha to 1e-6 on 50 constructions", {}, 0, 0,
                   n, 0, 0, {}},
                  slots, 1e-6, timer.seconds(), 0.0);
}

SuiteResult suite_witness_quality(const VerifyOptions& opt) {
    Timer timer;
    const long n = 50;
    Slots slots(n);
    for_samples(n, opt.parallel, [&](long i) {
        run_kernel(slots, i, [&]() -> double {
            DecompCase c = make_decomp_case(opt, 5, i, 15);  // same cases as the round-trip
            DefectReport rep = is_almost_geodesic(c.space, c.wb.witness, 1e-9, 0);
            double r = rep.sup_defect;
            const Point& y0 = c.wb.witness.front();
            for (size_t m = 1; m < c.wb.witness.size(); ++m) {
                const Point& zn = c.wb.witness[m];
                double dinf = distance(c.space, y0, zn);
                for (size_t k = 0; k < c.J.size(); ++k) {
                    double dj = distance(c.space.factors()[static_cast<size_t>(c.J[k])],
                                         y0.tuple()[static_cast<size_t>(c.J[k])],
                                         zn.tuple()[static_cast<size_t>(c.J[k])]);
                    r = std::max(r, std::fabs(dinf - dj - c.alpha[k]));
                }
            }
            return r;
        });
    });
    return finish({"witness-quality",
                   "witness defects and radius offsets d_inf - d_j = alpha_j within 1e-9", {}, 0,
                   0, n, 0, 0, {}},
                  slots, 1e-9, timer.seconds(), 0.0);
}

// ---------------------------------------------------------------------------
// 7. Detour distance vs variation norm
// ---------------------------------------------------------------------------

SuiteResult suite_detour_variation_law(const VerifyOptions& opt) {
    Timer timer;
    const long n = 100;
    Slots slots(n);
    for_samples(n, opt.parallel, [&](long i) {
        run_kernel(slots, i, [&]() -> double {
            SplitMix64 g = sample_rng(opt, 7, i);
            int p = 2 + static_cast<int>(i % 3);
            Space space = Space::product(std::vector<Space>(static_cast<size_t>(p), Space::disc()));
            std::vector<int> J;
            for (int j = 0; j < p; ++j)
                if (g.unit() < 0.7) J.push_back(j);
            if (J.empty()) J.push_back(g.uniform_int(0, p - 1));
            std::vector<std::optional<Path>> rays(static_cast<size_t>(p));
            for (int j : J)
                rays[static_cast<size_t>(j)] = boundary_ray(
                    space.factors()[static_cast<size_t>(j)],
                    BoundaryPoint{DiscDir{sample_unit_complex(g)}});
            auto gauge = [&]() {
                std::vector<double> a;
                for (size_t k = 0; k < J.size(); ++k) a.push_back(g.range(0.0, 3.0));
                double lo = *std::min_element(a.begin(), a.end());
                for (double& v : a) v -= lo;
                return a;
            };
            std::vector<double> alpha = gauge(), beta = gauge();
            WitnessedBusemann wa = product_busemann(space, rays, alpha, 15);
            WitnessedBusemann wb = product_busemann(space, rays, beta, 15);
            DetourValue dv = detour_distance(space, wa, wb, 20.0, 1e-6);
            if (!dv.finite()) return kInf;
            std::vector<double> diff;
            for (size_t k = 0; k < alpha.size(); ++k) diff.push_back(alpha[k] - beta[k]);
            return std::fabs(dv.value - variation_norm(diff));
        });
    });
    return finish({"detour-variation-law",
                   "|delta - ||alpha - beta||_var| <= 1e-5 on 100 gauge pairs", {}, 0, 0, n, 0, 0,
                   {}},
                  slots, 1e-5, timer.seconds(), 10.0);
}

// ---------------------------------------------------------------------------
// 8. Singleton parts of the ball
// ---------------------------------------------------------------------------

SuiteResult suite_singleton_ball_parts(const VerifyOptions& opt) {
    Timer timer;
    const long n = 50;
    const Space ball2 = Space::ball(2);
    Slots slots(n);
    for_samples(n, opt.parallel, [&](long i) {
        run_kernel(slots, i, [&]() -> double {
            SplitMix64 g = sample_rng(opt, 8, i);
            cvec xi = sample_unit_cvec(2, g);
            cvec eta;
            double angle = 0.0;
            do {
                eta = sample_unit_cvec(2, g);
                double c = std::clamp(herm_dot(xi, eta).real(), -1.0, 1.0);
                angle = std::acos(c);
            } while (angle < 1e-3);
            // divergence: long witnesses reaching coordinate radius 1 - 1e-10
            WitnessedBusemann wx = witnessed(ball2, ball_boundary(ball2, xi), 24);
            WitnessedBusemann we = witnessed(ball2, ball_boundary(ball2, eta), 24);
            DetourValue dv = detour_distance(ball2, wx, we, 20.0, 1e-6);
            if (!dv.exceeded()) return kInf;
            // self cost: short witness keeps the kernels well conditioned
            WitnessedBusemann ws = witnessed(ball2, ball_boundary(ball2, xi), 12);
            DetourValue self = detour_cost(ball2, ws, ws.h, 20.0, 1e-6);
            if (!self.finite()) return kInf;
            return std::fabs(self.value);
        });
    });
    return finish({"singleton-ball-parts",
                   "delta(h_xi, h_eta) exceeds M = 20; H(h_xi, h_xi) = 0 within 1e-9", {}, 0, 0, n,
                   0, 0, {}},
                  slots, 1e-9, timer.seconds(), 0.0);
}

// ---------------------------------------------------------------------------
// 9. Embedding transport preserves the detour distance
// ---------------------------------------------------------------------------

namespace {

std::vector<cvec> random_unitary2(SplitMix64& g) {
    // Gram-Schmidt on a random complex 2x2 matrix.
    cvec a = {complexd(g.gaussian(), g.gaussian()), complexd(g.gaussian(), g.gaussian())};
    double na = std::sqrt(norm_sq(a));
    for (auto& c : a) c /= na;
    cvec b = {complexd(g.gaussian(), g.gaussian()), complexd(g.gaussian(), g.gaussian())};
    complexd proj = herm_dot(b, a);
    for (size_t q = 0; q < 2; ++q) b[q] -= proj * a[q];
    double nb = std::sqrt(norm_sq(b));
    for (auto& c : b) c /= nb;
    return {a, b};
}

double transport_pair_residual(const Space& src, const Embedding& phi,
                               const WitnessedBusemann& wx, const WitnessedBusemann& wy,
                               std::uint64_t probe_seed) {
    Space dst = embedding_target(phi, src);
    DetourValue d0 = detour_distance(src, wx, wy, 20.0, 1e-6);
    WitnessedBusemann tx = transport_under_embedding(phi, src, wx, probe_seed);
    WitnessedBusemann ty = transport_under_embedding(phi, src, wy, probe_seed);
    DetourValue d1 = detour_distance(dst, tx, ty, 20.0, 1e-6);
    if (d0.exceeded() && d1.exceeded()) return 0.0;
    if (d0.finite() && d1.finite()) return std::fabs(d0.value - d1.value);
    return kInf;
}

}  // namespace

SuiteResult suite_embedding_transport(const VerifyOptions& opt) {
    Timer timer;
    const long n = 20;
    const Space disc = Space::disc();
    const Space ball2 = Space::ball(2);
    Slots slots(n);
    for_samples(n, opt.parallel, [&](long i) {
        run_kernel(slots, i, [&]() -> double {
            SplitMix64 g = sample_rng(opt, 9, i);
            bool equal_pair = (i % 4 == 3);
            // diagonal disc -> disc^2
            complexd xi = sample_unit_complex(g);
            complexd eta = equal_pair ? xi : sample_unit_complex(g);
            WitnessedBusemann wx = witnessed(disc, disc_boundary(disc, xi), 18);
            WitnessedBusemann wy = witnessed(disc, disc_boundary(disc, eta), 18);
            double r = transport_pair_residual(disc, DiagonalEmbedding{2}, wx, wy, g.next());
            // unitary ball -> ball
            cvec bxi = sample_unit_cvec(2, g);
            cvec beta_dir = equal_pair ? bxi : sample_unit_cvec(2, g);
            UnitaryMap u{random_unitary2(g)};
            WitnessedBusemann bx = witnessed(ball2, ball_boundary(ball2, bxi), 18);
            WitnessedBusemann by = witnessed(ball2, ball_boundary(ball2, beta_dir), 18);
            r = std::max(r, transport_pair_residual(ball2, u, bx, by, g.next()));
            return r;
        });
    });
    return finish({"embedding-transport",
                   "diagonal and unitary transports preserve delta (2e-6 or both diverge)", {}, 0,
                   0, n, 0, 0, {}},
                  slots, 2e-6, timer.seconds(), 0.0);
}

// ---------------------------------------------------------------------------
// 10. Star graph caveat
// ---------------------------------------------------------------------------

SuiteResult suite_star_graph_caveat(const VerifyOptions& opt) {
    Timer timer;
    const long n = 20;
    const Space star = Space::star_graph();
    std::vector<Point> tips;
    for (int k = 1; k <= 40; ++k) tips.emplace_back(StarPoint{k, static_cast<double>(k)});
    Slots slots(n);
    for_samples(n, opt.parallel, [&](long i) {
        run_kernel(slots, i, [&]() -> double {
            SplitMix64 g = sample_rng(opt, 10, i);
            Point z = sample_star_dyadic(g, 8);
            double hb = distance(star, z, star.basepoint());
            // Partial values are exactly d(z, b) once the tips leave z's edge.
            for (int m = 8; m < 40; ++m) {
                double v = distance(star, z, tips[static_cast<size_t>(m)]) -
                           distance(star, star.basepoint(), tips[static_cast<size_t>(m)]);
                if (v != hb) return kInf;
            }
            LimitEstimate e = horofunction_limit_estimate(star, tips, z);
            if (e.value != hb || e.tail_spread != 0.0 || !e.converged) return kInf;
            return 0.0;
        });
    });
    return finish({"star-graph-caveat",
                   "tip-sequence limit equals h_b exactly (non-proper space caveat)", {}, 0, 0, n,
                   0, 0, {}},
                  slots, 0.0, timer.seconds(), 0.0);
}

// ---------------------------------------------------------------------------
// 11. Radius inversion along rays
// ---------------------------------------------------------------------------

SuiteResult suite_radius_inversion(const VerifyOptions& opt) {
    Timer timer;
    const long n = 100;
    const Space disc = Space::disc();
    const Space ball2 = Space::ball(2);
    Slots slots(n);
    for_samples(n, opt.parallel, [&](long i) {
        run_kernel(slots, i, [&]() -> double {
            SplitMix64 g = sample_rng(opt, 11, i);
            Path ray;
            double beta_hi = 12.0;
            switch (i % 3) {
                case 0:
                    ray = boundary_ray(disc, BoundaryPoint{DiscDir{sample_unit_complex(g)}});
                    break;
                case 1:
                    ray = boundary_ray(ball2, BoundaryPoint{BallDir{sample_unit_cvec(2, g)}});
                    break;
                default: {
                    Space space = Space::product({Space::disc(), Space::disc()});
                    std::vector<std::optional<Path>> rays(2);
                    rays[0] = boundary_ray(disc, BoundaryPoint{DiscDir{sample_unit_complex(g)}});
                    rays[1] = boundary_ray(disc, BoundaryPoint{DiscDir{sample_unit_complex(g)}});
                    WitnessedBusemann wb =
                        product_busemann(space, rays, {0.0, g.range(0.0, 1.0)}, 10);
                    std::vector<Point> anchors(wb.witness.begin(), wb.witness.end());
                    ray = induced_ray(space, anchors);
                    beta_hi = 0.9 * ray.length;
                    break;
                }
            }
            double b1 = g.range(0.0, beta_hi / 3.0);
            double b2 = g.range(beta_hi / 3.0, 2.0 * beta_hi / 3.0);
            double b3 = g.range(2.0 * beta_hi / 3.0, beta_hi);
            const Point origin = ray.at(0.0);
            double r = 0.0, prev_t = -1.0;
            for (double beta : {b1, b2, b3}) {
                RadiusPoint rp = ray_point_at_radius(ray, beta);
                r = std::max(r, std::fabs(distance(ray.space, rp.point, origin) - beta));
                if (rp.t <= prev_t) return kInf;  // strict monotonicity in t
                prev_t = rp.t;
            }
            return r;
        });
    });
    return finish({"radius-inversion",
                   "|d(gamma(t), gamma(0)) - beta| <= 1e-10 with monotone t", {}, 0, 0, n, 0, 0,
                   {}},
                  slots, 1e-10, timer.seconds(), 0.0);
}

}  // namespace

// ---------------------------------------------------------------------------
// Registry
// ---------------------------------------------------------------------------

const std::vector<std::string>& suite_ids() {
    static const std::vector<std::string> ids = {
        "metric-axioms",        "formula-cross-checks", "hor-limit-law",
        "busemann-ray-identity", "decomposition-roundtrip", "witness-quality",
        "detour-variation-law", "singleton-ball-parts", "embedding-transport",
        "star-graph-caveat",    "radius-inversion"};
    return ids;
}

SuiteResult run_suite(const std::string& id, const VerifyOptions& opt) {
    if (id == "metric-axioms") return suite_metric_axioms(opt);
    if (id == "formula-cross-checks") return suite_formula_cross_checks(opt);
    if (id == "hor-limit-law") return suite_hor_limit_law(opt);
    if (id == "busemann-ray-identity") return suite_busemann_ray_identity(opt);
    if (id == "decomposition-roundtrip") return suite_decomposition_roundtrip(opt);
    if (id == "witness-quality") return suite_witness_quality(opt);
    if (id == "detour-variation-law") return suite_detour_variation_law(opt);
    if (id == "singleton-ball-parts") return suite_singleton_ball_parts(opt);
    if (id == "embedding-transport") return suite_embedding_transport(opt);
    if (id == "star-graph-caveat") return suite_star_graph_caveat(opt);
    if (id == "radius-inversion") return suite_radius_inversion(opt);
    fail(errc::bad_argument, "unknown suite \"" + id + "\"");
}

VerifyReport run_all_suites(const VerifyOptions& opt) {
    VerifyReport rep;
    rep.seed = opt.seed;
    rep.parallel = opt.parallel;
    rep.all_pass = true;
    Timer timer;
    for (const std::string& id : suite_ids()) {
        rep.suites.push_back(run_suite(id, opt));
        rep.all_pass = rep.all_pass && rep.suites.back().pass;
    }
    rep.total_seconds = timer.seconds();
    rep.all_pass = rep.all_pass && rep.total_seconds < 60.0;
    return rep;
}

std::string format_suite_line(const SuiteResult& r) {
    char buf[256];
    std::snprintf(buf, sizeof buf, "[%s] %-24s worst=%.3e tol=%.1e n=%ld (%.2fs)%s%s",
                  r.pass ? "PASS" : "FAIL", r.id.c_str(), r.worst, r.tolerance, r.samples,
                  r.seconds, r.note.empty() ? "" : " -- ", r.note.c_str());
    return buf;
}

}  // namespace horo
