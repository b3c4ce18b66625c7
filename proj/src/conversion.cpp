#include "nuk/conversion.hpp"

#include <numeric>

#include "nuk/error.hpp"
#include "nuk/monotones.hpp"

namespace nuk {

WitnessReport decide(const Distribution& x, const Distribution& y) {
  return noisy_majorizes(x, y);
}

namespace {

// x lifted to the common dimension: x tensor uniform(anc), then sorted.
Distribution lifted_sorted(const Distribution& x, long long anc) {
  return sort_descending(
      tensor_product(x, uniform(static_cast<int>(anc))));
}

void apply_step_in_place(std::vector<Rat>& v, const TTransform& t) {
  Rat a = v[t.i - 1], b = v[t.j - 1];
  v[t.i - 1] = t.w * a + (1 - t.w) * b;
  v[t.j - 1] = t.w * b + (1 - t.w) * a;
}

}  // namespace

Protocol synthesize(const Distribution& x, const Distribution& y) {
  WitnessReport rep = noisy_majorizes(x, y);
  if (!rep.go)
    fail(Err::not_convertible,
         "conversion infeasible: curve gap " + rat_to_string(rep.delta_exact) +
             " at elbow " + std::to_string(rep.failing_k));

  long long L = std::lcm(static_cast<long long>(x.dim()),
                         static_cast<long long>(y.dim()));
  Protocol pr;
  pr.d_common = L;
  pr.ancilla_in = L / x.dim();
  pr.ancilla_out = L / y.dim();

  Distribution lifted = tensor_product(x, uniform(static_cast<int>(pr.ancilla_in)));
  std::vector<int> order = sort_permutation(lifted);
  pr.pre_permutation.assign(L, 0);
  for (long long k = 0; k < L; ++k) pr.pre_permutation[order[k]] = static_cast<int>(k);

  std::vector<Rat> a = sort_descending(lifted).p;
  std::vector<Rat> b = lifted_sorted(y, pr.ancilla_out).p;

  // Greedy two-level mixing: take the first underfull slot and the
  // closest overfull slot above it, and move just enough mass to close
  // the smaller of the two gaps.  Majorization of a over b puts an
  // excess strictly before the first deficit (the running partial-sum
  // gap is nonnegative and must rise before it can fall), slots between
  // the pair already agree, and each step zeroes at least one slot's
  // gap, so at most d_common - 1 steps remain before a == b.
  for (long long guard = 0; a != b; ++guard) {
    if (guard >= L - 1)
      fail(Err::not_realizable, "mixing synthesis exceeded its step bound");
    long long ex = -1, df = -1;
    for (long long k = 0; k < L; ++k)
      if (a[k] < b[k]) {
        df = k;
        break;
      }
    for (long long k = df - 1; k >= 0; --k)
      if (a[k] > b[k]) {
        ex = k;
        break;
      }
    if (ex < 0 || df < 0 || ex >= df)
      fail(Err::not_realizable, "mixing synthesis lost majorization");
    Rat excess = a[ex] - b[ex];
    Rat deficit = b[df] - a[df];
    Rat delta = excess < deficit ? excess : deficit;
    Rat gap = a[ex] - a[df];
    TTransform t{static_cast<int>(ex + 1), static_cast<int>(df + 1),
                 1 - delta / gap};
    apply_step_in_place(a, t);
    pr.steps.push_back(std::move(t));
  }
  return pr;
}

bool verify_protocol(const Protocol& pr, const Distribution& x,
                     const Distribution& y) {
  if (pr.d_common < 1 || pr.ancilla_in < 1 || pr.ancilla_out < 1)
    fail(Err::invalid_argument, "protocol dimensions must be positive");
  if (pr.d_common != x.dim() * pr.ancilla_in ||
      pr.d_common != y.dim() * pr.ancilla_out)
    fail(Err::dimension_mismatch,
         "protocol common dimension does not match the lifted endpoints");
  long long L = pr.d_common;
  if (static_cast<long long>(pr.pre_permutation.size()) != L)
    fail(Err::invalid_argument, "pre-permutation has wrong size");
  std::vector<char> seen(L, 0);
  for (int t : pr.pre_permutation) {
    if (t < 0 || t >= L || seen[t])
      fail(Err::invalid_argument, "pre-permutation is not a bijection");
    seen[t] = 1;
  }
  for (const TTransform& t : pr.steps) {
    if (t.i < 1 || t.j < 1 || t.i > L || t.j > L || t.i == t.j)
      fail(Err::invalid_argument, "step indices outside the common space");
    if (t.w < Rat(1, 2) || t.w > 1)
      fail(Err::out_of_range, "step weight " + rat_to_string(t.w) +
                                  " outside [1/2, 1]");
  }

  Distribution lifted =
      tensor_product(x, uniform(static_cast<int>(pr.ancilla_in)));
  std::vector<Rat> v(L);
  for (long long k = 0; k < L; ++k) v[pr.pre_permutation[k]] = lifted.p[k];
  for (const TTransform& t : pr.steps) apply_step_in_place(v, t);
  return v == lifted_sorted(y, pr.ancilla_out).p;
}

Channel protocol_channel(const Protocol& pr) {
  int L = static_cast<int>(pr.d_common);
  Channel c{L, L, std::vector<std::vector<Rat>>(L, std::vector<Rat>(L, Rat(0)))};
  for (int k = 0; k < L; ++k) c.m[pr.pre_permutation[k]][k] = 1;
  for (const TTransform& t : pr.steps)
    c = compose(t_transform_channel(L, t.i, t.j, t.w), c);
  return c;
}

SharpSpec distillable(const Distribution& x) {
  return SharpSpec{x.dim(), support_size(x)};
}

FormationCost formation_cost(const Distribution& x) {
  Rat two = Rat(x.dim()) * *std::max_element(x.p.begin(), x.p.end());
  return FormationCost{log2_rat(two), two};
}

CostYieldReport cost_or_yield(const Distribution& x, const Distribution& y) {
  WitnessReport w = lambda_witness(x, y);
  CostYieldReport r;
  r.lambda = w.lambda;
  r.two_to_lambda = w.two_to_lambda;
  if (w.two_to_lambda == 1)
    r.kind = CostYieldReport::equivalence;
  else if (w.two_to_lambda > 1)
    r.kind = CostYieldReport::yield;
  else
    r.kind = CostYieldReport::cost;

  ExtReal i0x = renyi_nonuniformity(x, ExtReal::of(0.0));
  ExtReal i0y = renyi_nonuniformity(y, ExtReal::of(0.0));
  ExtReal iix = renyi_nonuniformity(x, ExtReal::inf());
  ExtReal iiy = renyi_nonuniformity(y, ExtReal::inf());
  r.lower = i0x - iiy;
  ExtReal u1 = i0x - i0y, u2 = iix - iiy;
  r.upper = u1 < u2 ? u1 : u2;

  // Cross-checks: the reported lambda must itself be realizable as a
  // sharp-state side payment, in the direction its sign dictates.  The
  // sharp state has dimension num(2^lambda); skip the check when that
  // would blow up the product dimension.
  auto checkable = [](const Rat& ratio) {
    return ratio.get_num().fits_slong_p() && ratio.get_num().get_si() <= 10000;
  };
  if (r.kind == CostYieldReport::yield) {
    if (checkable(w.two_to_lambda)) {
      SharpSpec s = sharp_from_ratio(w.two_to_lambda);
      if (!noisy_majorizes(x, tensor_product(y, s.state())).go)
        fail(Err::not_realizable, "yield witness failed its cross-check");
    }
  } else if (r.kind == CostYieldReport::cost) {
    Rat inv = 1 / w.two_to_lambda;
    if (checkable(inv)) {
      SharpSpec s = sharp_from_ratio(inv);
      if (!noisy_majorizes(tensor_product(x, s.state()), y).go)
        fail(Err::not_realizable, "cost witness failed its cross-check");
    }
  }
  return r;
}

}  // namespace nuk
