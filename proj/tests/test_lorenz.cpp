#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nuk/distribution.hpp>
#include <nuk/error.hpp>
#include <nuk/lorenz.hpp>
#include <nuk/monotones.hpp>
#include <nuk/rational.hpp>

#include <cmath>
#include <set>
#include <vector>

#include "testutil.hpp"

using namespace nuk;

namespace {

Distribution dist(std::initializer_list<const char*> comps) {
  std::vector<Rat> v;
  for (const char* s : comps) v.push_back(rat_from_string(s));
  return make_distribution(std::move(v));
}

}  // namespace

TEST_CASE("build_curve accumulates sorted partial sums") {
  LorenzCurve c = build_curve(dist({"0.1", "0.9"}));
  REQUIRE(c.d == 2);
  CHECK(c.S == std::vector<Rat>{Rat(0), frac(9, 10), Rat(1)});

  // Endpoints are pinned for every state.
  test::Rng rng(5);
  for (int t = 0; t < 20; ++t) {
    LorenzCurve r = build_curve(test::random_distribution(rng, 1 + int(rng() % 7)));
    CHECK(r.S.front() == 0);
    CHECK(r.S.back() == 1);
  }
}

TEST_CASE("eval_curve interpolates linearly between elbows") {
  LorenzCurve c = build_curve(dist({"0.9", "0.1"}));
  CHECK(eval_curve(c, frac(1, 4)) == frac(9, 20));
  CHECK(eval_curve(c, Rat(0)) == 0);
  CHECK(eval_curve(c, frac(1, 2)) == frac(9, 10));
  CHECK(eval_curve(c, frac(3, 4)) == frac(19, 20));
  CHECK(eval_curve(c, Rat(1)) == 1);

  try {
    eval_curve(c, frac(5, 4));
    FAIL("expected out_of_range");
  } catch (const Error& e) {
    CHECK(e.code == Err::out_of_range);
  }
}

TEST_CASE("ky_fan sums the k largest components") {
  Distribution x = dist({"2/3", "1/6", "1/6"});
  CHECK(ky_fan(x, 0) == 0);
  CHECK(ky_fan(x, 1) == frac(2, 3));
  CHECK(ky_fan(x, 2) == frac(5, 6));
  CHECK(ky_fan(x, 3) == 1);
  // Unsorted input is sorted internally.
  CHECK(ky_fan(dist({"1/6", "1/6", "2/3"}), 1) == frac(2, 3));
  try {
    ky_fan(x, 4);
    FAIL("expected out_of_range");
  } catch (const Error& e) {
    CHECK(e.code == Err::out_of_range);
  }
}

TEST_CASE("invert_curve returns the smallest preimage") {
  // The curve of (1/2,1/2,0,0) is flat at height 1 beyond u=1/2.
  LorenzCurve c = build_curve(dist({"1/2", "1/2", "0", "0"}));
  CHECK(invert_curve(c, Rat(1)) == frac(1, 2));
  CHECK(invert_curve(c, frac(1, 2)) == frac(1, 4));
  CHECK(invert_curve(c, Rat(0)) == 0);

  LorenzCurve s1 = build_curve(dist({"1", "0"}));
  CHECK(invert_curve(s1, frac(1, 3)) == frac(1, 6));
  CHECK(invert_curve(s1, Rat(1)) == frac(1, 2));

  // eval then invert is the identity left of the flat tail.
  Distribution x = dist({"0.5", "0.3", "0.2"});
  LorenzCurve cx = build_curve(x);
  for (int k = 1; k <= 10; ++k) {
    Rat u = frac(k, 10);
    CHECK(invert_curve(cx, eval_curve(cx, u)) == u);
  }
}

TEST_CASE("rescaled_histogram reads the step function of the sorted state") {
  Distribution x = dist({"0.9", "0.1"});
  CHECK(rescaled_histogram(x, frac(1, 4)) == frac(9, 5));
  CHECK(rescaled_histogram(x, frac(3, 4)) == frac(1, 5));
  CHECK(rescaled_histogram(x, Rat(0)) == frac(9, 5));
  CHECK(rescaled_histogram(uniform(3), frac(1, 3)) == 1);
  CHECK(rescaled_histogram(uniform(7), frac(9, 10)) == 1);
  CHECK(rescaled_histogram(dist({"1", "0"}), frac(3, 4)) == 0);
  try {
    rescaled_histogram(x, Rat(1));
    FAIL("expected out_of_domain");
  } catch (const Error& e) {
    CHECK(e.code == Err::out_of_domain);
  }
}

TEST_CASE("noisy_equivalent identifies states with equal curves") {
  test::Rng rng(99);
  for (int t = 0; t < 25; ++t) {
    Distribution x = test::random_distribution(rng, 1 + int(rng() % 6));
    CHECK(noisy_equivalent(x, tensor_product(x, uniform(7))));
  }
  CHECK(noisy_equivalent(dist({"1", "0"}), dist({"1/2", "1/2", "0", "0"})));
  CHECK_FALSE(noisy_equivalent(dist({"1", "0"}), dist({"1", "0", "0"})));
  CHECK_FALSE(noisy_equivalent(uniform(2), dist({"0.9", "0.1"})));
}

TEST_CASE("noisy_majorizes compares curves at the target's elbows") {
  WitnessReport r =
      noisy_majorizes(dist({"2/3", "1/6", "1/6"}), dist({"1/2", "1/2", "0"}));
  CHECK_FALSE(r.go);
  CHECK(r.failing_k == 2);
  CHECK(r.delta_exact == frac(-1, 6));

  WitnessReport go =
      noisy_majorizes(dist({"1/3", "1/3", "1/3", "0"}), dist({"1/2", "1/2"}));
  CHECK(go.go);
  CHECK(go.delta_exact >= 0);
  CHECK(go.failing_k == -1);

  // The catalysis showcase pair: not convertible without help.
  WitnessReport vd =
      noisy_majorizes(dist({"1/2", "1/4", "1/4", "0"}), dist({"0.8", "0.2"}));
  CHECK_FALSE(vd.go);
  CHECK(vd.failing_k == 1);
  CHECK(vd.delta_exact == frac(-1, 20));

  // Reflexivity: x vs x is a go with zero slack at some elbow.
  test::Rng rng(31);
  for (int t = 0; t < 25; ++t) {
    Distribution x = test::random_distribution(rng, 2 + int(rng() % 5));
    WitnessReport self = noisy_majorizes(x, x);
    CHECK(self.go);
    CHECK(self.delta_exact == 0);
  }
}

TEST_CASE("lambda against the uniform state reads off I0 and Iinf") {
  // 2^Lambda(x || m) = d / |supp| = 2^{I0(x)}.
  Distribution x = dist({"1/2", "1/4", "1/4", "0"});
  WitnessReport r = lambda_witness(x, uniform(4));
  CHECK(r.two_to_lambda == frac(4, 3));
  CHECK(r.lambda.as_double() ==
        doctest::Approx(log2(4.0 / 3.0)).epsilon(1e-12));

  // 2^Lambda(m || y) = 1 / (d * max y) = 2^{-Iinf(y)}.
  Distribution y = dist({"0.9", "0.1"});
  WitnessReport l = lambda_witness(uniform(2), y);
  CHECK(l.two_to_lambda == frac(5, 9));
  CHECK(l.lambda.as_double() ==
        doctest::Approx(-(1.0 + log2(0.9))).epsilon(1e-12));

  // Between sharp states the shift is the nonuniformity difference.
  WitnessReport s = lambda_witness(SharpSpec{2, 1}.state(),
                                   SharpSpec{4, 2}.state());
  CHECK(s.two_to_lambda == 1);
  CHECK(s.go);

  // A one-outcome target behaves like a uniform target.
  WitnessReport one = lambda_witness(x, uniform(1));
  CHECK(one.two_to_lambda == frac(4, 3));
}

TEST_CASE("padding with uniform states leaves the curve invariant") {
  test::Rng rng(404);
  for (int t = 0; t < 30; ++t) {
    Distribution x = test::random_distribution(rng, 1 + int(rng() % 5));
    int pad = 2 + int(rng() % 7);
    Distribution xp = tensor_product(x, uniform(pad));
    LorenzCurve cx = build_curve(x), cp = build_curve(xp);
    // Equality as functions follows from equality on both breakpoint sets.
    for (int k = 0; k <= cx.d; ++k)
      CHECK(eval_curve(cp, frac(k, cx.d)) == cx.S[k]);
    for (int k = 0; k <= cp.d; ++k)
      CHECK(eval_curve(cx, frac(k, cp.d)) == cp.S[k]);
  }
}

TEST_CASE("curves are concave: segment slopes never increase") {
  test::Rng rng(606);
  for (int t = 0; t < 40; ++t) {
    Distribution x = test::random_distribution(rng, 1 + int(rng() % 8));
    LorenzCurve c = build_curve(x);
    for (int k = 2; k <= c.d; ++k)
      CHECK(c.S[k] - c.S[k - 1] <= c.S[k - 1] - c.S[k - 2]);
  }
}

TEST_CASE("the log-shift witness is complete for convertibility") {
  test::Rng rng(808);
  int nogo = 0;
  for (int t = 0; t < 1000; ++t) {
    Distribution x = test::random_distribution(rng, 1 + int(rng() % 6));
    Distribution y = test::random_distribution(rng, 1 + int(rng() % 6));
    WitnessReport r = noisy_majorizes(x, y);
    // Sign agreement is exact: go iff 2^lambda >= 1.
    CHECK(r.go == (r.two_to_lambda >= 1));
    // The shift is sandwiched by -Iinf(y) <= lambda <= I0(x), exactly:
    // 1/(d_y max y) <= 2^lambda <= d_x/|supp x|.
    Distribution ys = sort_descending(y);
    CHECK(r.two_to_lambda * Rat(y.dim()) * ys.p[0] >= 1);
    CHECK(r.two_to_lambda * Rat(support_size(x)) <= Rat(x.dim()));
    if (!r.go) ++nogo;
  }
  // The draw must exercise both outcomes for the check to mean anything.
  CHECK(nogo > 100);
  CHECK(nogo < 900);
}

TEST_CASE("mutual majorization is exactly curve equality") {
  test::Rng rng(909);
  int both = 0;
  for (int t = 0; t < 400; ++t) {
    Distribution x = test::random_distribution(rng, 1 + int(rng() % 4));
    Distribution y = test::random_distribution(rng, 1 + int(rng() % 4));
    bool fwd = noisy_majorizes(x, y).go;
    bool bwd = noisy_majorizes(y, x).go;
    if (fwd && bwd) {
      CHECK(noisy_equivalent(x, y));
      ++both;
    }
    if (noisy_equivalent(x, y)) {
      CHECK(fwd);
      CHECK(bwd);
    }
  }
  // Padded copies guarantee the equivalence branch runs.
  Distribution z = dist({"0.7", "0.3"});
  CHECK(noisy_majorizes(z, tensor_product(z, uniform(3))).go);
  CHECK(noisy_majorizes(tensor_product(z, uniform(3)), z).go);
}

TEST_CASE("tail length and on-ramp slope recover I0 and Iinf") {
  test::Rng rng(1111);
  for (int t = 0; t < 30; ++t) {
    Distribution x = test::random_distribution(rng, 1 + int(rng() % 6));
    Distribution s = sort_descending(x);
    LorenzCurve c = build_curve(x);
    // The curve reaches 1 at |supp|/d, so the flat tail has length
    // 1 - 2^{-I0}.
    CHECK(invert_curve(c, Rat(1)) ==
          frac((long long)support_size(x), (long long)x.dim()));
    // The first segment rises with slope d * max x = 2^{Iinf}.
    Rat slope = (c.S[1] - c.S[0]) * c.d;
    CHECK(slope == Rat(x.dim()) * s.p[0]);
    double i0 = renyi_nonuniformity(x, ExtReal::of(0.0)).as_double();
    double iinf = renyi_nonuniformity(x, ExtReal::inf()).as_double();
    CHECK(log2(rat_to_double(slope)) == doctest::Approx(iinf).epsilon(1e-9));
    CHECK(-log2(rat_to_double(invert_curve(c, Rat(1)))) ==
          doctest::Approx(i0).epsilon(1e-9));
  }
}
