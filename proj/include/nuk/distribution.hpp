#pragma once

#include <cstdint>
#include <vector>

#include "nuk/rational.hpp"

namespace nuk {

// Probability vector with exact rational components.
// Invariants: every component >= 0 and the components sum to exactly 1.
// Construct through make_distribution so the invariants always hold.
struct Distribution {
  std::vector<Rat> p;

  int dim() const { return static_cast<int>(p.size()); }
  bool operator==(const Distribution& o) const { return p == o.p; }
};

// Validates and canonicalizes. Throws Error with code negative_component
// or not_normalized.
Distribution make_distribution(std::vector<Rat> comps);

Distribution uniform(int d);

// Components in non-increasing order. Stable (ties keep input order),
// which the protocol synthesizer relies on.
Distribution sort_descending(const Distribution& x);

// Index permutation that sorts x non-increasingly, stable. perm[k] is the
// input index whose component lands in slot k of the sorted vector.
std::vector<int> sort_permutation(const Distribution& x);

// Row-major: component (i, j) of the product sits at index i*y.dim() + j.
Distribution tensor_product(const Distribution& x, const Distribution& y);
Distribution tensor_power(const Distribution& x, int n);

enum class Keep { first, second };

// Partial sum over one factor of a product on dimensions da*db.
Distribution marginalize(const Distribution& xab, int da, int db, Keep keep);

int support_size(const Distribution& x);
bool has_full_support(const Distribution& x);

// Sharp state: uniform over d_u of d outcomes, nonuniformity log2(d/d_u).
// Carried as the integer pair so 2^I stays an exact rational.
struct SharpSpec {
  long long d = 1;
  long long d_u = 1;

  Rat ratio() const;            // d/d_u, canonicalized
  double nonuniformity() const; // log2(d/d_u)
  Distribution state() const;
};

// Smallest sharp spec with 2^I equal to the given rational (must be >= 1).
SharpSpec sharp_from_ratio(const Rat& two_to_i);

// Smallest-dimension y such that y (tensor) s_I has the same Lorenz curve
// as x, where I = log2(a/b) with a >= b >= 1.  Demands I <= I_0(x), i.e.
// the curve of x must be flat at height 1 from u = b/a on; otherwise
// throws too_much_truncation.  not_realizable is reserved for a curve with
// no rational elbow structure, which cannot happen for rational inputs.
Distribution truncate(const Distribution& x, long long a, long long b);

}  // namespace nuk
