#include "nuk/distribution.hpp"

#include <algorithm>
#include <numeric>

#include "nuk/error.hpp"

namespace nuk {

Distribution make_distribution(std::vector<Rat> comps) {
  if (comps.empty()) fail(Err::invalid_argument, "empty distribution");
  Rat sum(0);
  for (size_t i = 0; i < comps.size(); ++i) {
    comps[i].canonicalize();
    if (comps[i] < 0)
      fail(Err::negative_component, "component " + std::to_string(i + 1) +
                                        " is " + rat_to_string(comps[i]));
    sum += comps[i];
  }
  if (sum != 1)
    fail(Err::not_normalized, "components sum to " + rat_to_string(sum));
  return Distribution{std::move(comps)};
}

Distribution uniform(int d) {
  if (d < 1) fail(Err::invalid_argument, "dimension must be positive");
  return Distribution{std::vector<Rat>(d, Rat(1, d))};
}

Distribution sort_descending(const Distribution& x) {
  Distribution out = x;
  std::stable_sort(out.p.begin(), out.p.end(),
                   [](const Rat& a, const Rat& b) { return a > b; });
  return out;
}

std::vector<int> sort_permutation(const Distribution& x) {
  std::vector<int> idx(x.dim());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](int a, int b) { return x.p[a] > x.p[b]; });
  return idx;
}

Distribution tensor_product(const Distribution& x, const Distribution& y) {
  std::vector<Rat> out;
  out.reserve(static_cast<size_t>(x.dim()) * y.dim());
  for (const Rat& a : x.p)
    for (const Rat& b : y.p) out.push_back(a * b);
  return Distribution{std::move(out)};
}

Distribution tensor_power(const Distribution& x, int n) {
  if (n < 0) fail(Err::invalid_argument, "negative tensor power");
  Distribution out{std::vector<Rat>{Rat(1)}};
  for (int i = 0; i < n; ++i) out = tensor_product(out, x);
  return out;
}

Distribution marginalize(const Distribution& xab, int da, int db, Keep keep) {
  if (da < 1 || db < 1 || da * db != xab.dim())
    fail(Err::dimension_mismatch, "marginal dims " + std::to_string(da) + "x" +
                                      std::to_string(db) +
                                      " do not factor the input");
  int dk = keep == Keep::first ? da : db;
  std::vector<Rat> out(dk, Rat(0));
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < db; ++j)
      out[keep == Keep::first ? i : j] += xab.p[i * db + j];
  return Distribution{std::move(out)};
}

int support_size(const Distribution& x) {
  int n = 0;
  for (const Rat& v : x.p)
    if (v > 0) ++n;
  return n;
}

bool has_full_support(const Distribution& x) {
  return support_size(x) == x.dim();
}

Rat SharpSpec::ratio() const { return frac(d, d_u); }

double SharpSpec::nonuniformity() const { return log2_rat(ratio()); }

Distribution SharpSpec::state() const {
  if (d < 1 || d_u < 1 || d_u > d)
    fail(Err::invalid_argument, "sharp spec needs 1 <= d_u <= d");
  std::vector<Rat> out(d, Rat(0));
  for (long long i = 0; i < d_u; ++i) out[i] = frac(1LL, d_u);
  return Distribution{std::move(out)};
}

SharpSpec sharp_from_ratio(const Rat& two_to_i) {
  if (two_to_i < 1)
    fail(Err::out_of_domain,
         "sharp-state ratio must be >= 1, got " + rat_to_string(two_to_i));
  Rat r = two_to_i;
  r.canonicalize();
  if (!r.get_num().fits_slong_p() || !r.get_den().fits_slong_p())
    fail(Err::out_of_range, "sharp-state ratio too large to realize");
  return SharpSpec{r.get_num().get_si(), r.get_den().get_si()};
}

}  // namespace nuk
