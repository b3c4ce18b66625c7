#include "nuk/channel.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "nuk/error.hpp"

namespace nuk {

void validate_channel(const Channel& c) {
  if (c.d_in < 1 || c.d_out < 1)
    fail(Err::invalid_argument, "channel dimensions must be positive");
  if (static_cast<int>(c.m.size()) != c.d_out)
    fail(Err::dimension_mismatch, "channel has wrong row count");
  Rat row_target = frac(c.d_in, c.d_out);
  std::vector<Rat> col_sum(c.d_in, Rat(0));
  for (int r = 0; r < c.d_out; ++r) {
    if (static_cast<int>(c.m[r].size()) != c.d_in)
      fail(Err::dimension_mismatch, "channel row " + std::to_string(r + 1) +
                                        " has wrong length");
    Rat row_sum(0);
    for (int j = 0; j < c.d_in; ++j) {
      if (c.m[r][j] < 0)
        fail(Err::negative_component, "negative channel entry");
      row_sum += c.m[r][j];
      col_sum[j] += c.m[r][j];
    }
    if (row_sum != row_target)
      fail(Err::not_normalized,
           "row " + std::to_string(r + 1) + " sums to " +
               rat_to_string(row_sum) + ", not d_in/d_out");
  }
  for (int j = 0; j < c.d_in; ++j)
    if (col_sum[j] != 1)
      fail(Err::not_normalized, "column " + std::to_string(j + 1) +
                                    " sums to " + rat_to_string(col_sum[j]));
}

Distribution apply_channel(const Channel& c, const Distribution& x) {
  if (x.dim() != c.d_in)
    fail(Err::dimension_mismatch, "channel expects dimension " +
                                      std::to_string(c.d_in) + ", got " +
                                      std::to_string(x.dim()));
  std::vector<Rat> out(c.d_out, Rat(0));
  for (int r = 0; r < c.d_out; ++r)
    for (int j = 0; j < c.d_in; ++j) out[r] += c.m[r][j] * x.p[j];
  return make_distribution(std::move(out));
}

Channel identity_channel(int d) {
  Channel c{d, d, std::vector<std::vector<Rat>>(d, std::vector<Rat>(d, Rat(0)))};
  for (int i = 0; i < d; ++i) c.m[i][i] = 1;
  return c;
}

Channel completely_randomizing(int d_in, int d_out) {
  if (d_in < 1 || d_out < 1)
    fail(Err::invalid_argument, "channel dimensions must be positive");
  return Channel{d_in, d_out,
                 std::vector<std::vector<Rat>>(
                     d_out, std::vector<Rat>(d_in, Rat(1, d_out)))};
}

Channel t_transform_channel(int d, int i, int j, const Rat& w) {
  if (i < 1 || j < 1 || i > d || j > d || i == j)
    fail(Err::invalid_argument, "T-transform needs distinct 1-based levels");
  if (w < 0 || w > 1)
    fail(Err::out_of_range, "mixing weight " + rat_to_string(w));
  Channel c = identity_channel(d);
  c.m[i - 1][i - 1] = w;
  c.m[j - 1][j - 1] = w;
  c.m[i - 1][j - 1] = 1 - w;
  c.m[j - 1][i - 1] = 1 - w;
  return c;
}

Channel compose(const Channel& second, const Channel& first) {
  if (first.d_out != second.d_in)
    fail(Err::dimension_mismatch, "channel composition dims do not chain");
  Channel c{first.d_in, second.d_out,
            std::vector<std::vector<Rat>>(
                second.d_out, std::vector<Rat>(first.d_in, Rat(0)))};
  for (int r = 0; r < second.d_out; ++r)
    for (int k = 0; k < second.d_in; ++k) {
      if (second.m[r][k] == 0) continue;
      for (int j = 0; j < first.d_in; ++j)
        c.m[r][j] += second.m[r][k] * first.m[k][j];
    }
  return c;
}

// Sampled as: embed the input with a uniform ancilla of dimension
// d1 = d_out/gcd into a common space of dimension lcm(d_in, d_out), mix a
// handful of seeded random permutations there, marginalize to d_out, then
// blend with the completely randomizing map.  Each piece preserves the
// uniform state, so the mixture does; the blend keeps every matrix entry
// strictly positive, which downstream monotonicity tests rely on to stay
// clear of infinities.
Channel random_noisy_channel(int d_in, int d_out, std::uint64_t seed) {
  if (d_in < 1 || d_out < 1)
    fail(Err::invalid_argument, "channel dimensions must be positive");
  long g = std::gcd(static_cast<long>(d_in), static_cast<long>(d_out));
  long d1 = d_out / g;  // ancilla on the input side
  long d2 = d_in / g;   // marginalized block size on the output side
  long N = static_cast<long>(d_in) * d1;

  std::mt19937_64 rng(seed);
  int n_perms = 2 + static_cast<int>(rng() % 6);
  std::vector<unsigned> weights(n_perms);
  unsigned total = 0;
  for (auto& w : weights) {
    w = 1 + static_cast<unsigned>(rng() % 64);
    total += w;
  }

  // full[r][c] accumulated as a rational mix of permutation matrices
  std::vector<std::vector<Rat>> full(N, std::vector<Rat>(N, Rat(0)));
  std::vector<int> perm(N);
  for (int t = 0; t < n_perms; ++t) {
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Rat w = frac(weights[t], total);
    for (long c = 0; c < N; ++c) full[perm[c]][c] += w;
  }

  Channel out{d_in, d_out,
              std::vector<std::vector<Rat>>(d_out,
                                            std::vector<Rat>(d_in, Rat(0)))};
  for (int j = 0; j < d_out; ++j)
    for (int i = 0; i < d_in; ++i) {
      Rat acc(0);
      for (long b = 0; b < d2; ++b)
        for (long a = 0; a < d1; ++a) acc += full[j * d2 + b][i * d1 + a];
      out.m[j][i] = acc / d1;
    }

  // blend weight in [1/4, 3/4]
  Rat mu = frac(16 + static_cast<long>(rng() % 33), 64);
  Rat keep = 1 - mu;
  Rat floor_entry = mu / d_out;
  for (int j = 0; j < d_out; ++j)
    for (int i = 0; i < d_in; ++i)
      out.m[j][i] = keep * out.m[j][i] + floor_entry;

  validate_channel(out);
  return out;
}

}  // namespace nuk
