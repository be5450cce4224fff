#pragma once

#include "horo/rng.hpp"
#include "horo/space.hpp"

namespace horo {

// Seeded samplers shared by the property suites and tests. Disc/ball/polydisc
// radii are capped away from the boundary so the log kernels stay in their
// well-conditioned range.
complexd sample_unit_complex(SplitMix64& g);
cvec sample_unit_cvec(int n, SplitMix64& g);
Point sample_point(const Space& space, SplitMix64& g, double radius_cap = 0.95);

// Star-graph points with dyadic offsets (multiples of 1/8), so path-length
// arithmetic is exact in binary floating point.
Point sample_star_dyadic(SplitMix64& g, int max_edge = 8);

}  // namespace horo
