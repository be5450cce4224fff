#pragma once

#include <span>

#include "horo/almost_geodesic.hpp"

namespace horo {

// ||x||_var = max_j x_j + max_j(-x_j); the quotient norm of 2||.||_inf on
// R^n / Sp(1). Invariant under adding a constant to every coordinate.
double variation_norm(std::span<const double> x);

// ---------------------------------------------------------------------------
// Detour cost / distance
// ---------------------------------------------------------------------------

struct DetourValue {
    enum class Kind { finite, exceeds_cutoff, undecided };

    Kind kind = Kind::undecided;
    double value = 0.0;   // stabilised limit when finite
    double cutoff = 0.0;  // the M used
    int at_index = 0;     // witness index where the cutoff was crossed / last probed
    LimitEstimate diagnostics;

    bool finite() const { return kind == Kind::finite; }
    bool exceeded() const { return kind == Kind::exceeds_cutoff; }
    bool undecided() const { return kind == Kind::undecided; }
};

// A Busemann point together with an almost-geodesic witness sequence
// (witness[0] is the basepoint of the construction).
struct WitnessedBusemann {
    Horofunction h;
    std::vector<Point> witness;
    DefectReport witness_check;
};

// Cap on disc/ball witness coordinate radii: 1 - 1e-10, i.e. metric radius
// 2 atanh(1 - 1e-10) ~= 23.719. Keeps the log kernels well conditioned.
double witness_radius_cap();

// Default witness for a boundary horofunction: radial/linear anchors at metric
// radii 1, 2, ..., n_max (disc/ball radii clamped at the cap; when n_max
// reaches past it, a final anchor at the cap radius is appended). Composite
// horofunctions are witnessed through product_busemann.
WitnessedBusemann witnessed(const Space& space, const Horofunction& h, int n_max = 23);

// Product Busemann construction: places the j-th coordinate at radius
// (max_i d_i(y^n_i, y^0_i)) - alpha_j along the given factor rays; coordinates
// off J stay pinned at the ray origins / factor basepoints. Factor rays must
// carry a recognised boundary limit. alpha is aligned with the engaged factor
// indices in ascending order and must satisfy min alpha = 0, alpha >= 0.
WitnessedBusemann product_busemann(const Space& space,
                                   const std::vector<std::optional<Path>>& factor_rays,
                                   const std::vector<double>& alpha, int n_max);

// H(from, to) = lim_n d(b, z^n) + to(z^n) along from's witness. Certifies
// divergence as ExceedsCutoff once a partial value reaches M; stabilisation
// uses the same tail-window rule as the limit estimates. A window that neither
// stabilises nor crosses M is reported Undecided, never coerced.
DetourValue detour_cost(const Space& space, const WitnessedBusemann& from, const Horofunction& to,
                        double cutoff = 20.0, double tol = 1e-6);

// delta(a, b) = H(a, b) + H(b, a), with ExceedsCutoff if either side exceeds.
DetourValue detour_distance(const Space& space, const WitnessedBusemann& a,
                            const WitnessedBusemann& b, double cutoff = 20.0, double tol = 1e-6);

// ---------------------------------------------------------------------------
// Parts
// ---------------------------------------------------------------------------

struct PartKey {
    std::vector<int> J;  // 0-based, sorted
    // Per j in J: the factor boundary form stripped of offsets (alpha = 0),
    // compared structurally with 1e-9 tolerance on directions.
    std::vector<Horofunction> ids;
};

PartKey part_key(const Horofunction& h);
int part_dimension(const Horofunction& h);  // |J| - 1
bool part_equal(const PartKey& a, const PartKey& b, double tol = 1e-9);

// ---------------------------------------------------------------------------
// Isometric embeddings (whitelisted, probe-verified)
// ---------------------------------------------------------------------------

struct IdentityMap {};
struct DiagonalEmbedding {
    int copies = 2;  // disc -> disc^copies, z |-> (z, ..., z)
};
struct FactorInclusion {
    Space target;  // product space
    int slot = 0;
    std::vector<Point> fixed;  // points for the other factors, in order
};
struct UnitaryMap {
    std::vector<cvec> rows;  // n x n unitary acting on the ball
};
struct MobiusDisc {
    complexd a;  // z |-> e^{i theta} (z - a) / (1 - conj(a) z)
    double theta = 0.0;
};

using Embedding = std::variant<IdentityMap, DiagonalEmbedding, FactorInclusion, UnitaryMap, MobiusDisc>;

Space embedding_target(const Embedding& phi, const Space& src);
Point apply_embedding(const Embedding& phi, const Space& src, const Point& x);

// Verifies the map is isometric on a seeded probe (1e3 pairs, 1e-9), pushes the
// witness forward and returns the transported Busemann point with basepoint
// phi(b). The limit is recognised in closed form for every whitelisted map.
WitnessedBusemann transport_under_embedding(const Embedding& phi, const Space& src,
                                            const WitnessedBusemann& wb,
                                            std::uint64_t probe_seed = 0x9e3779b9ULL);

}  // namespace horo
