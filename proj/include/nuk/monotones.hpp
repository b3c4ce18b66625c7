#pragma once

#include "nuk/distribution.hpp"
#include "nuk/ext_real.hpp"

namespace nuk {

// The nonuniformity monotone zoo.  Every function here is non-increasing
// under uniform-preserving stochastic maps and vanishes exactly on
// uniform states (Gini, Schutz, Amato shifted: Amato takes value sqrt(2)
// there).  All logarithms are base 2 except klimesh_f, which follows the
// natural-log convention of its source criterion.
//
// Conventions on the boundary of the simplex: 0 log 0 = 0, and for p < 0
// a zero component makes sum x_i^p = +inf, hence I_p = +inf.

double shannon_entropy(const Distribution& x);       // H(x)
double shannon_nonuniformity(const Distribution& x); // log2 d - H(x)

// Order-p Renyi nonuniformity I_p for p in [-inf, +inf].
ExtReal renyi_nonuniformity(const Distribution& x, const ExtReal& p);

// Order-p Tsallis nonuniformity (finite p only; p = 1 is the
// Shannon-relative-entropy limit against the uniform state, in nats
// scaled to base 2 here: we keep base 2 throughout).
ExtReal tsallis_nonuniformity(const Distribution& x, double p);

// log2 d + (1/d) sum_i log2 x_i, negated: the relative entropy of the
// uniform state to x.  +inf when any component vanishes.
ExtReal burg_nonuniformity(const Distribution& x);

// Classical inequality indices, exact where the formula is rational.
Rat gini_exact(const Distribution& x);
Rat schutz_exact(const Distribution& x);
double gini(const Distribution& x);
double schutz(const Distribution& x);
double amato(const Distribution& x);                  // curve length, sqrt(2) at uniform
double geometric_nonuniformity(const Distribution& x); // 1 - d * geometric mean

// L_x(u) for fixed u: one monotone per u in [0, 1].
Rat lorenz_height_monotone(const Distribution& x, const Rat& u);

// Order-p relative entropy H_p(x || q), q on the same dimension.
// p = 1 gives sum x_i log2(x_i / q_i).  Throws dimension_mismatch.
ExtReal relative_entropy(const Distribution& x, const Distribution& q,
                         const ExtReal& p);

// The family whose across-all-r comparison decides catalytic
// convertibility.  Natural log.  Branches:
//   r > 1:      ln sum x_i^r
//   r = 1:      sum x_i ln x_i
//   0 < r < 1:  -ln sum x_i^r
//   r = 0:      -sum ln x_i
//   r < 0:      ln sum x_i^r
// +inf for r <= 0 when some component vanishes.
ExtReal klimesh_f(const Distribution& x, double r);

}  // namespace nuk
