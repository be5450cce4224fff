#include "horo/detour.hpp"

#include <algorithm>
#include <cmath>

#include "horo/sampling.hpp"

namespace horo {

double variation_norm(std::span<const double> x) {
    if (x.empty()) fail(errc::empty_input, "variation norm of an empty vector");
    double hi = x[0], lo = x[0];
    for (double v : x) {
        hi = std::max(hi, v);
        lo = std::min(lo, v);
    }
    return hi - lo;  // max x_j + max(-x_j)
}

double witness_radius_cap() { return std::log(2.0 / 1e-10 - 1.0); }

// ---------------------------------------------------------------------------
// Witness factories
// ---------------------------------------------------------------------------

namespace {

// Metric radii 1, 2, ..., capped for disc/ball factors; when the request runs
// past the cap, one final anchor sits exactly at the cap radius.
std::vector<double> radial_schedule(int n_max, bool capped) {
    if (n_max < 1) fail(errc::bad_argument, "n_max must be >= 1");
    std::vector<double> out;
    const double cap = witness_radius_cap();
    for (int n = 1; n <= n_max; ++n) {
        if (capped && static_cast<double>(n) > cap) {
            out.push_back(cap);
            break;
        }
        out.push_back(static_cast<double>(n));
    }
    return out;
}

DefectReport check_witness(const Space& space, const std::vector<Point>& w) {
    return is_almost_geodesic(space, w, 1e-6, 0);
}

WitnessedBusemann witness_along_ray(const Space& space, const Horofunction& h, const Path& ray,
                                    int n_max, bool capped) {
    std::vector<Point> w;
    w.push_back(ray.at(0.0));
    for (double r : radial_schedule(n_max, capped)) w.push_back(ray.at(r));
    return WitnessedBusemann{h, w, check_witness(space, w)};
}

}  // namespace

WitnessedBusemann product_busemann(const Space& space,
                                   const std::vector<std::optional<Path>>& factor_rays,
                                   const std::vector<double>& alpha, int n_max) {
    if (space.kind() != SpaceKind::product)
        fail(errc::unsupported_space, "product_busemann requires a product space");
    if (static_cast<int>(factor_rays.size()) != space.dim())
        fail(errc::dimension_mismatch, "one (optional) ray per factor");

    std::vector<int> J;
    for (int j = 0; j < space.dim(); ++j)
        if (factor_rays[static_cast<size_t>(j)]) J.push_back(j);
    if (J.empty()) fail(errc::bad_argument, "at least one factor ray is required");
    if (alpha.size() != J.size()) fail(errc::dimension_mismatch, "alpha must align with the rays");

    double amin = *std::min_element(alpha.begin(), alpha.end());
    if (std::fabs(amin) > 1e-12)
        fail(errc::gauge_violation, "min over J of alpha must be 0 within 1e-12");
    for (double a : alpha)
        if (a < -1e-12) fail(errc::gauge_violation, "alpha must be nonnegative");
    double amax = *std::max_element(alpha.begin(), alpha.end());

    // Base tuple: ray origins on J, factor basepoints elsewhere.
    PointTuple y0(static_cast<size_t>(space.dim()));
    for (int j = 0; j < space.dim(); ++j)
        y0[static_cast<size_t>(j)] = factor_rays[static_cast<size_t>(j)]
                                         ? factor_rays[static_cast<size_t>(j)]->at(0.0)
                                         : space.factors()[static_cast<size_t>(j)].basepoint();

    // Factor horofunctions: the recognised ray limits, rebased to the ray origin.
    std::vector<Horofunction> factors;
    for (size_t k = 0; k < J.size(); ++k) {
        const Path& ray = *factor_rays[static_cast<size_t>(J[k])];
        if (!ray.space.same_shape(space.factors()[static_cast<size_t>(J[k])]))
            fail(errc::dimension_mismatch, "factor ray lives in the wrong space");
        if (!ray.limit)
            fail(errc::unsupported_space,
                 "factor ray carries no recognised boundary limit; use boundary_ray outputs");
        factors.push_back(rebase(*ray.limit, ray.at(0.0)));
    }

    // Radius schedule R_n = n starting past max alpha. Each engaged ray limits
    // the reachable radius; disc/ball coordinates are additionally capped at
    // coordinate radius 1 - 1e-10.
    int n_first = std::max(1, static_cast<int>(std::ceil(amax - 1e-12)));
    double reach = std::numeric_limits<double>::infinity();
    for (size_t k = 0; k < J.size(); ++k) {
        const Path& ray = *factor_rays[static_cast<size_t>(J[k])];
        double limit = ray.length;
        SpaceKind fk = ray.space.kind();
        if (fk == SpaceKind::disc || fk == SpaceKind::ball)
            limit = std::min(limit, witness_radius_cap() + alpha[k]);
        reach = std::min(reach, limit);
    }
    int n_last = n_max;
    if (std::isfinite(reach)) n_last = std::min(n_last, static_cast<int>(std::floor(reach)));
    if (n_last < n_first)
        fail(errc::radius_unreachable, "factor rays are too short for the requested offsets");

    std::vector<Point> witness;
    witness.emplace_back(y0);
    for (int n = n_first; n <= n_last; ++n) {
        PointTuple z = y0;
        for (size_t k = 0; k < J.size(); ++k) {
            double target = static_cast<double>(n) - alpha[k];
            z[static_cast<size_t>(J[k])] =
                ray_point_at_radius(*factor_rays[static_cast<size_t>(J[k])], target).point;
        }
        witness.emplace_back(std::move(z));
    }
    if (witness.size() < 2) fail(errc::radius_unreachable, "empty witness schedule");

    Horofunction h = product_composite(space, J, std::move(factors),
                                       std::vector<double>(alpha.begin(), alpha.end()));
    h.basepoint = Point(y0);
    return WitnessedBusemann{h, witness, check_witness(space, witness)};
}

WitnessedBusemann witnessed(const Space& space, const Horofunction& h, int n_max) {
    if (!h.space.same_shape(space)) fail(errc::dimension_mismatch, "horofunction space mismatch");
    if (std::holds_alternative<InternalPeak>(h.form))
        fail(errc::not_a_boundary_horofunction, "internal peaks are not Busemann points");

    if (auto* d = std::get_if<DiscBoundary>(&h.form)) {
        Path ray = boundary_ray(space, BoundaryPoint{DiscDir{d->xi}});
        return witness_along_ray(space, h, ray, n_max, true);
    }
    if (auto* bvar = std::get_if<BallBoundary>(&h.form)) {
        Path ray = boundary_ray(space, BoundaryPoint{BallDir{bvar->xi}});
        return witness_along_ray(space, h, ray, n_max, true);
    }
    if (auto* s = std::get_if<SupSign>(&h.form)) {
        // z^n_j = -sign_j (R_n - alpha_j); coordinates off J stay at 0.
        double amax = *std::max_element(s->alpha.begin(), s->alpha.end());
        int n_first = std::max(1, static_cast<int>(std::ceil(amax - 1e-12)));
        if (n_max < n_first) fail(errc::bad_argument, "n_max too small for the offsets");
        std::vector<Point> w;
        auto make = [&](double R, bool base) {
            if (space.kind() == SpaceKind::real_line) {
                double v = base ? 0.0 : -s->signs[0] * (R - s->alpha[0]);
                return Point(v);
            }
            rvec v(static_cast<size_t>(space.dim()), 0.0);
            if (!base)
                for (size_t k = 0; k < s->J.size(); ++k)
                    v[static_cast<size_t>(s->J[k])] = -s->signs[k] * (R - s->alpha[k]);
            return Point(v);
        };
        w.push_back(make(0.0, true));
        for (int n = n_first; n <= n_max; ++n) w.push_back(make(static_cast<double>(n), false));
        return WitnessedBusemann{h, w, check_witness(space, w)};
    }
    // Product composite: rebuild the factor rays from the factor forms.
    const auto& pc = std::get<ProductComposite>(h.form);
    std::vector<std::optional<Path>> rays(static_cast<size_t>(space.dim()));
    for (size_t k = 0; k < pc.J.size(); ++k) {
        const Space& fs = space.factors()[static_cast<size_t>(pc.J[k])];
        const Horofunction& fh = pc.factors[k];
        if (auto* d = std::get_if<DiscBoundary>(&fh.form))
            rays[static_cast<size_t>(pc.J[k])] = boundary_ray(fs, BoundaryPoint{DiscDir{d->xi}});
        else if (auto* bb = std::get_if<BallBoundary>(&fh.form))
            rays[static_cast<size_t>(pc.J[k])] = boundary_ray(fs, BoundaryPoint{BallDir{bb->xi}});
        else if (auto* ss = std::get_if<SupSign>(&fh.form)) {
            if (ss->J.size() != 1 || std::fabs(ss->alpha[0]) > 1e-12)
                fail(errc::unsupported_space,
                     "composite sup factors must be single-coordinate, offset-free");
            if (fs.kind() == SpaceKind::real_line)
                rays[static_cast<size_t>(pc.J[k])] =
                    boundary_ray(fs, BoundaryPoint{LineDir{-ss->signs[0]}});
            else
                rays[static_cast<size_t>(pc.J[k])] =
                    boundary_ray(fs, BoundaryPoint{SupDir{ss->J, {-ss->signs[0]}}});
        } else {
            fail(errc::not_a_boundary_horofunction, "composite factor without a closed-form ray");
        }
    }
    return product_busemann(space, rays, pc.alpha, n_max);
}

// ---------------------------------------------------------------------------
// Detour cost / distance
// ---------------------------------------------------------------------------

namespace {

void require_matching_basepoints(const Space& space, const Horofunction& a,
                                 const Horofunction& b) {
    if (distance(space, a.basepoint, b.basepoint) > 1e-12)
        fail(errc::bad_argument, "horofunctions must share a basepoint (rebase first)");
}

}  // namespace

DetourValue detour_cost(const Space& space, const WitnessedBusemann& from, const Horofunction& to,
                        double cutoff, double tol) {
    if (from.witness.size() < 2) fail(errc::empty_input, "witness too short");
    if (!from.witness_check.verdict)
        fail(errc::bad_argument, "witness fails the almost-geodesic check");
    require_matching_basepoints(space, from.h, to);
    const Point& b = from.h.basepoint;

    std::vector<double> u;
    u.reserve(from.witness.size() - 1);
    DetourValue out;
    out.cutoff = cutoff;
    for (size_t n = 1; n < from.witness.size(); ++n) {
        const Point& z = from.witness[n];
        double un = distance(space, b, z) + evaluate(to, z);
        u.push_back(un);
        if (un >= cutoff) {
            out.kind = DetourValue::Kind::exceeds_cutoff;
            out.at_index = static_cast<int>(n);
            return out;
        }
    }
    const int w = std::min<int>(5, static_cast<int>(u.size()));
    double lo = u.back(), hi = u.back();
    for (size_t i = u.size() - static_cast<size_t>(w); i < u.size(); ++i) {
        lo = std::min(lo, u[i]);
        hi = std::max(hi, u[i]);
    }
    out.diagnostics.value = u.back();
    out.diagnostics.tail_spread = hi - lo;
    out.diagnostics.converged = (hi - lo) <= tol;
    out.diagnostics.n_used = static_cast<int>(u.size());
    out.diagnostics.window = w;
    out.at_index = static_cast<int>(u.size());
    if (out.diagnostics.converged) {
        out.kind = DetourValue::Kind::finite;
        out.value = u.back();
    } else {
        out.kind = DetourValue::Kind::undecided;
    }
    return out;
}

DetourValue detour_distance(const Space& space, const WitnessedBusemann& a,
                            const WitnessedBusemann& b, double cutoff, double tol) {
    DetourValue hab = detour_cost(space, a, b.h, cutoff, tol);
    if (hab.exceeded()) return hab;
    DetourValue hba = detour_cost(space, b, a.h, cutoff, tol);
    if (hba.exceeded()) return hba;
    if (hab.undecided()) return hab;
    if (hba.undecided()) return hba;
    DetourValue out;
    out.kind = DetourValue::Kind::finite;
    out.value = hab.value + hba.value;
    out.cutoff = cutoff;
    out.at_index = std::max(hab.at_index, hba.at_index);
    out.diagnostics = hab.diagnostics;
    out.diagnostics.tail_spread = std::max(hab.diagnostics.tail_spread, hba.diagnostics.tail_spread);
    out.diagnostics.value = out.value;
    return out;
}

// ---------------------------------------------------------------------------
// Parts
// ---------------------------------------------------------------------------

PartKey part_key(const Horofunction& h) {
    PartKey key;
    if (std::holds_alternative<InternalPeak>(h.form))
        fail(errc::not_a_boundary_horofunction, "internal peaks have no part key");
    if (auto* d = std::get_if<DiscBoundary>(&h.form)) {
        key.J = {0};
        key.ids = {Horofunction{h.space, DiscBoundary{d->xi}, h.space.basepoint()}};
        return key;
    }
    if (auto* bb = std::get_if<BallBoundary>(&h.form)) {
        key.J = {0};
        key.ids = {Horofunction{h.space, BallBoundary{bb->xi}, h.space.basepoint()}};
        return key;
    }
    if (auto* s = std::get_if<SupSign>(&h.form)) {
        key.J = s->J;
        for (size_t k = 0; k < s->J.size(); ++k)
            key.ids.push_back(Horofunction{h.space, SupSign{{s->J[k]}, {s->signs[k]}, {0.0}},
                                           h.space.basepoint()});
        return key;
    }
    const auto& pc = std::get<ProductComposite>(h.form);
    key.J = pc.J;
    key.ids = pc.factors;  // compared structurally, offsets inside factors included
    return key;
}

int part_dimension(const Horofunction& h) { return static_cast<int>(part_key(h).J.size()) - 1; }

namespace {

bool forms_equal(const Horofunction& a, const Horofunction& b, double tol);

bool cvec_close(const cvec& a, const cvec& b, double tol) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (std::abs(a[i] - b[i]) > tol) return false;
    return true;
}

bool forms_equal(const Horofunction& a, const Horofunction& b, double tol) {
    if (a.form.index() != b.form.index()) return false;
    if (auto* d = std::get_if<DiscBoundary>(&a.form))
        return std::abs(d->xi - std::get<DiscBoundary>(b.form).xi) <= tol;
    if (auto* bb = std::get_if<BallBoundary>(&a.form))
        return cvec_close(bb->xi, std::get<BallBoundary>(b.form).xi, tol);
    if (auto* s = std::get_if<SupSign>(&a.form)) {
        const auto& t = std::get<SupSign>(b.form);
        if (s->J != t.J || s->signs != t.signs) return false;
        for (size_t k = 0; k < s->alpha.size(); ++k)
            if (std::fabs(s->alpha[k] - t.alpha[k]) > tol) return false;
        return true;
    }
    if (auto* pc = std::get_if<ProductComposite>(&a.form)) {
        const auto& qc = std::get<ProductComposite>(b.form);
        if (pc->J != qc.J) return false;
        for (size_t k = 0; k < pc->factors.size(); ++k) {
            if (!forms_equal(pc->factors[k], qc.factors[k], tol)) return false;
            if (std::fabs(pc->alpha[k] - qc.alpha[k]) > tol) return false;
        }
        return true;
    }
    return false;  // internal peaks never key
}

}  // namespace

bool part_equal(const PartKey& a, const PartKey& b, double tol) {
    if (a.J != b.J || a.ids.size() != b.ids.size()) return false;
    for (size_t k = 0; k < a.ids.size(); ++k)
        if (!forms_equal(a.ids[k], b.ids[k], tol)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Embeddings
// ---------------------------------------------------------------------------

Space embedding_target(const Embedding& phi, const Space& src) {
    if (std::holds_alternative<IdentityMap>(phi)) return src;
    if (auto* d = std::get_if<DiagonalEmbedding>(&phi)) {
        if (src.kind() != SpaceKind::disc)
            fail(errc::unsupported_space, "diagonal embedding is whitelisted for the disc");
        if (d->copies < 2) fail(errc::bad_argument, "diagonal embedding needs >= 2 copies");
        return Space::product(std::vector<Space>(static_cast<size_t>(d->copies), src));
    }
    if (auto* f = std::get_if<FactorInclusion>(&phi)) {
        if (f->target.kind() != SpaceKind::product)
            fail(errc::bad_argument, "factor inclusion target must be a product");
        if (f->slot < 0 || f->slot >= f->target.dim())
            fail(errc::bad_argument, "slot outside the product arity");
        if (!f->target.factors()[static_cast<size_t>(f->slot)].same_shape(src))
            fail(errc::dimension_mismatch, "source space does not match the slot");
        if (static_cast<int>(f->fixed.size()) != f->target.dim() - 1)
            fail(errc::dimension_mismatch, "one fixed point per remaining factor");
        return f->target;
    }
    if (auto* u = std::get_if<UnitaryMap>(&phi)) {
        if (src.kind() != SpaceKind::ball)
            fail(errc::unsupported_space, "unitary maps act on the ball");
        if (static_cast<int>(u->rows.size()) != src.dim())
            fail(errc::dimension_mismatch, "unitary dimension mismatch");
        for (const cvec& r : u->rows)
            if (static_cast<int>(r.size()) != src.dim())
                fail(errc::dimension_mismatch, "unitary rows must be square");
        return src;
    }
    if (auto* m = std::get_if<MobiusDisc>(&phi)) {
        if (src.kind() != SpaceKind::disc)
            fail(errc::unsupported_space, "Mobius automorphisms act on the disc");
        if (std::abs(m->a) >= 1.0 - kInteriorMargin)
            fail(errc::out_of_domain, "Mobius parameter must be interior");
        return src;
    }
    fail(errc::bad_argument, "unknown embedding");
}

namespace {

cvec apply_unitary(const UnitaryMap& u, const cvec& z) {
    cvec out(u.rows.size(), complexd(0.0, 0.0));
    for (size_t i = 0; i < u.rows.size(); ++i)
        for (size_t j = 0; j < z.size(); ++j) out[i] += u.rows[i][j] * z[j];
    return out;
}

complexd apply_mobius(const MobiusDisc& m, complexd z) {
    return std::polar(1.0, m.theta) * (z - m.a) / (1.0 - std::conj(m.a) * z);
}

}  // namespace

Point apply_embedding(const Embedding& phi, const Space& /*src*/, const Point& x) {
    if (std::holds_alternative<IdentityMap>(phi)) return x;
    if (auto* d = std::get_if<DiagonalEmbedding>(&phi))
        return Point(PointTuple(static_cast<size_t>(d->copies), x));
    if (auto* f = std::get_if<FactorInclusion>(&phi)) {
        PointTuple t;
        size_t fixed_at = 0;
        for (int j = 0; j < f->target.dim(); ++j) {
            if (j == f->slot)
                t.push_back(x);
            else
                t.push_back(f->fixed[fixed_at++]);
        }
        return Point(t);
    }
    if (auto* u = std::get_if<UnitaryMap>(&phi)) return Point(apply_unitary(*u, x.cplx_vec()));
    if (auto* m = std::get_if<MobiusDisc>(&phi)) return Point(apply_mobius(*m, x.cplx()));
    fail(errc::bad_argument, "unknown embedding");
}

WitnessedBusemann transport_under_embedding(const Embedding& phi, const Space& src,
                                            const WitnessedBusemann& wb,
                                            std::uint64_t probe_seed) {
    Space dst = embedding_target(phi, src);
    if (auto* f = std::get_if<FactorInclusion>(&phi)) {
        size_t fixed_at = 0;
        for (int j = 0; j < f->target.dim(); ++j)
            if (j != f->slot)
                validate_point(f->target.factors()[static_cast<size_t>(j)],
                               f->fixed[fixed_at++]);
    }

    // Probe: the map must preserve distances on 1e3 seeded pairs within 1e-9.
    SplitMix64 g(SplitMix64::mix(probe_seed, 0xab5e5ULL));
    for (int i = 0; i < 1000; ++i) {
        Point x = sample_point(src, g, 0.9);
        Point y = sample_point(src, g, 0.9);
        double d0 = distance(src, x, y);
        double d1 = distance(dst, apply_embedding(phi, src, x), apply_embedding(phi, src, y));
        if (std::fabs(d0 - d1) > 1e-9)
            fail(errc::not_isometric, "probe pair changed distance by more than 1e-9");
    }

    std::vector<Point> pushed;
    pushed.reserve(wb.witness.size());
    for (const Point& z : wb.witness) pushed.push_back(apply_embedding(phi, src, z));

    Point new_basepoint = apply_embedding(phi, src, wb.h.basepoint);

    // Closed-form limit of the pushed witness.
    Horofunction out_h = wb.h;
    if (std::holds_alternative<IdentityMap>(phi)) {
        // unchanged
    } else if (auto* d = std::get_if<DiagonalEmbedding>(&phi)) {
        std::vector<int> J;
        std::vector<Horofunction> factors;
        for (int k = 0; k < d->copies; ++k) {
            J.push_back(k);
            factors.push_back(wb.h);
        }
        out_h = product_composite(dst, J, factors,
                                  std::vector<double>(static_cast<size_t>(d->copies), 0.0));
    } else if (auto* f = std::get_if<FactorInclusion>(&phi)) {
        out_h = product_composite(dst, {f->slot}, {wb.h}, {0.0});
    } else if (auto* u = std::get_if<UnitaryMap>(&phi)) {
        const auto& bb = std::get<BallBoundary>(wb.h.form);
        out_h = Horofunction{dst, BallBoundary{apply_unitary(*u, bb.xi)}, dst.basepoint()};
    } else if (auto* m = std::get_if<MobiusDisc>(&phi)) {
        const auto& db = std::get<DiscBoundary>(wb.h.form);
        complexd gxi = apply_mobius(*m, db.xi);
        gxi /= std::abs(gxi);  // boundary action, renormalised against roundoff
        out_h = Horofunction{dst, DiscBoundary{gxi}, dst.basepoint()};
    }
    out_h.basepoint = new_basepoint;

    return WitnessedBusemann{out_h, pushed, check_witness(dst, pushed)};
}

}  // namespace horo
