#pragma once

#include "horo/space.hpp"

namespace horo {

// Hermitian inner product sum_i z_i * conj(w_i). Accumulation order is fixed so
// that symmetric calls produce bit-identical moduli.
complexd herm_dot(const cvec& z, const cvec& w);
double norm_sq(const cvec& z);

// Compensated kernels: 1 - z conj(w), 1 - <z, w>, 1 - |z|^2 and 1 - ||z||^2
// evaluated without the catastrophic cancellation of the plain expressions.
complexd one_minus_zconjw(complexd z, complexd w);
complexd one_minus_herm_dot(const cvec& z, const cvec& w);
double one_minus_abs_sq(complexd z);
double one_minus_norm_sq(const cvec& z);

// Production hyperbolic distance on the unit disc (stable rearrangement of the
// textbook forms below; agrees with both to well under 1e-12).
double disc_rho(complexd z, complexd w);

// The two textbook display forms, implemented literally for cross-checking.
double disc_rho_log_form(complexd z, complexd w);
double disc_rho_atanh_form(complexd z, complexd w);

// Closed-form Kobayashi distance on the Euclidean ball.
double ball_distance(const cvec& z, const cvec& w);

// Distance in any model space. Validates both points; symmetric bit-for-bit,
// and exactly the max of factor distances on products.
double distance(const Space& space, const Point& x, const Point& y);

}  // namespace horo
