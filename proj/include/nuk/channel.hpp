#pragma once

#include <cstdint>
#include <vector>

#include "nuk/distribution.hpp"

namespace nuk {

// Stochastic map that sends the uniform state on d_in outcomes to the
// uniform state on d_out outcomes: columns sum to 1, rows sum to
// d_in/d_out.  Stored row-major, m[row][col], applied as y = M x.
struct Channel {
  int d_in = 0;
  int d_out = 0;
  std::vector<std::vector<Rat>> m;
};

// Throws dimension_mismatch / not_normalized when the row or column sum
// conditions fail, negative_component on a negative entry.
void validate_channel(const Channel& c);

Distribution apply_channel(const Channel& c, const Distribution& x);

Channel identity_channel(int d);

// Every input is forgotten and replaced by the uniform state.
Channel completely_randomizing(int d_in, int d_out);

// w * Id + (1 - w) * swap(i, j) on d outcomes; i, j are 1-based.
// Doubly stochastic for any w in [0, 1].
Channel t_transform_channel(int d, int i, int j, const Rat& w);

// Deterministic pseudo-random uniform-preserving channel: a rational
// convex mixture of permutations on a common refinement, partial-traced
// down to d_in -> d_out.  Every entry is strictly positive is NOT
// guaranteed in general, but the mixture always includes the completely
// randomizing map with positive weight, so outputs keep full support
// whenever the input has any mass.  Same seed, same channel.
Channel random_noisy_channel(int d_in, int d_out, std::uint64_t seed);

// Composition: (second after first), dims must chain.
Channel compose(const Channel& second, const Channel& first);

}  // namespace nuk
