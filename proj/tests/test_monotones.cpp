#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nuk/channel.hpp>
#include <nuk/distribution.hpp>
#include <nuk/error.hpp>
#include <nuk/lorenz.hpp>
#include <nuk/monotones.hpp>
#include <nuk/rational.hpp>

#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "testutil.hpp"

using namespace nuk;

namespace {

Distribution dist(std::initializer_list<const char*> comps) {
  std::vector<Rat> v;
  for (const char* s : comps) v.push_back(rat_from_string(s));
  return make_distribution(std::move(v));
}

double renyi_d(const Distribution& x, double p) {
  return renyi_nonuniformity(x, ExtReal::of(p)).as_double();
}

// The full zoo as named double-valued functions, for property sweeps.
// ExtReal-valued entries map +inf to HUGE_VAL, which the comparisons
// below handle (inf <= inf + tol holds).
struct NamedMonotone {
  const char* name;
  std::function<double(const Distribution&)> f;
};

const std::vector<NamedMonotone>& zoo() {
  static const std::vector<NamedMonotone> z = {
      {"shannon", shannon_nonuniformity},
      {"renyi-0", [](const Distribution& x) { return renyi_d(x, 0.0); }},
      {"renyi-1/2", [](const Distribution& x) { return renyi_d(x, 0.5); }},
      {"renyi-2", [](const Distribution& x) { return renyi_d(x, 2.0); }},
      {"renyi-inf",
       [](const Distribution& x) {
         return renyi_nonuniformity(x, ExtReal::inf()).as_double();
       }},
      {"renyi--1", [](const Distribution& x) { return renyi_d(x, -1.0); }},
      {"tsallis-2",
       [](const Distribution& x) {
         return tsallis_nonuniformity(x, 2.0).as_double();
       }},
      {"burg",
       [](const Distribution& x) { return burg_nonuniformity(x).as_double(); }},
      {"gini", gini},
      {"schutz", schutz},
      {"amato", amato},
      {"geometric", geometric_nonuniformity},
  };
  return z;
}

}  // namespace

TEST_CASE("shannon nonuniformity matches the worked values") {
  CHECK(shannon_nonuniformity(dist({"1/3", "1/3", "1/3", "0"})) ==
        doctest::Approx(std::log2(4.0 / 3.0)).epsilon(1e-12));
  CHECK(shannon_nonuniformity(uniform(6)) == doctest::Approx(0.0));
  CHECK(shannon_nonuniformity(dist({"1", "0"})) == doctest::Approx(1.0));
  CHECK(shannon_entropy(dist({"1/2", "1/2"})) == doctest::Approx(1.0));
}

TEST_CASE("renyi nonuniformity covers all orders and limits") {
  Distribution x = dist({"1/2", "1/4", "1/4", "0"});
  CHECK(renyi_d(x, 0.0) == doctest::Approx(std::log2(4.0 / 3.0)).epsilon(1e-12));

  Distribution y = dist({"0.9", "0.1"});
  CHECK(renyi_nonuniformity(y, ExtReal::inf()).as_double() ==
        doctest::Approx(1.0 + std::log2(0.9)).epsilon(1e-12));
  CHECK(renyi_nonuniformity(y, ExtReal::ninf()).as_double() ==
        doctest::Approx(-std::log2(0.2)).epsilon(1e-12));

  // Sharp states have the same nonuniformity at every order p >= 0.
  Distribution s = SharpSpec{3, 2}.state();
  double expect = std::log2(1.5);
  for (double p : {0.0, 0.5, 1.0, 2.0, 7.5})
    CHECK(renyi_d(s, p) == doctest::Approx(expect).epsilon(1e-12));
  CHECK(renyi_nonuniformity(s, ExtReal::inf()).as_double() ==
        doctest::Approx(expect).epsilon(1e-12));

  // Negative orders blow up on zero components.
  CHECK(renyi_nonuniformity(x, ExtReal::of(-2.0)).is_inf());
  CHECK(renyi_nonuniformity(x, ExtReal::ninf()).is_inf());
  CHECK_FALSE(renyi_nonuniformity(y, ExtReal::of(-2.0)).is_inf());

  // p = 1 is the Shannon branch.
  CHECK(renyi_d(y, 1.0) ==
        doctest::Approx(shannon_nonuniformity(y)).epsilon(1e-12));
}

TEST_CASE("tsallis nonuniformity: sign convention, limit, closed form") {
  for (double p : {-2.0, -0.5, 0.5, 2.0, 3.0})
    CHECK(tsallis_nonuniformity(uniform(4), p).as_double() ==
          doctest::Approx(0.0));

  // Order 2: d * sum x^2 - 1.
  CHECK(tsallis_nonuniformity(dist({"0.9", "0.1"}), 2.0).as_double() ==
        doctest::Approx(0.64).epsilon(1e-12));

  // p -> 1 recovers Shannon up to the ln 2 factor.
  test::Rng rng(2024);
  for (int t = 0; t < 10; ++t) {
    Distribution x = test::random_full_support(rng, 2 + int(rng() % 5));
    double i1 = shannon_nonuniformity(x);
    for (double p : {1.0 - 1e-6, 1.0 + 1e-6}) {
      double ts = tsallis_nonuniformity(x, p).as_double();
      CHECK(ts / std::log(2.0) == doctest::Approx(i1).epsilon(1e-4));
    }
    // The p = 1 member itself is the natural-log Shannon form.
    CHECK(tsallis_nonuniformity(x, 1.0).as_double() / std::log(2.0) ==
          doctest::Approx(i1).epsilon(1e-12));
  }
}

TEST_CASE("burg nonuniformity is the reverse relative entropy") {
  CHECK(burg_nonuniformity(uniform(5)).as_double() == doctest::Approx(0.0));
  CHECK(burg_nonuniformity(dist({"1", "0"})).is_inf());
  CHECK(burg_nonuniformity(dist({"2/3", "1/3"})).as_double() ==
        doctest::Approx(0.5 * std::log2(9.0 / 8.0)).epsilon(1e-12));
}

TEST_CASE("gini, schutz, amato, geometric closed forms") {
  CHECK(gini_exact(uniform(4)) == 0);
  CHECK(schutz_exact(uniform(4)) == 0);
  CHECK(amato(uniform(4)) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK(geometric_nonuniformity(uniform(4)) == doctest::Approx(0.0));

  Distribution s1 = dist({"1", "0"});
  CHECK(gini_exact(s1) == frac(1, 4));
  CHECK(schutz_exact(s1) == frac(1, 2));
  CHECK(geometric_nonuniformity(s1) == doctest::Approx(1.0));

  Distribution x = dist({"1/2", "1/4", "1/4", "0"});
  CHECK(gini_exact(x) == frac(3, 16));
  CHECK(schutz_exact(x) == frac(1, 4));
  CHECK(gini(x) == doctest::Approx(3.0 / 16.0));
  CHECK(schutz(x) == doctest::Approx(0.25));
}

TEST_CASE("lorenz height delegates to the curve evaluation") {
  test::Rng rng(50);
  for (int t = 0; t < 20; ++t) {
    Distribution x = test::random_distribution(rng, 1 + int(rng() % 6));
    LorenzCurve c = build_curve(x);
    for (int k = 0; k <= 12; ++k)
      CHECK(lorenz_height_monotone(x, frac(k, 12)) ==
            eval_curve(c, frac(k, 12)));
  }
}

TEST_CASE("relative entropy against uniform recovers the nonuniformities") {
  test::Rng rng(51);
  for (int t = 0; t < 15; ++t) {
    Distribution x = test::random_distribution(rng, 2 + int(rng() % 5));
    Distribution m = uniform(x.dim());
    for (double p : {0.0, 0.5, 1.0, 2.0}) {
      ExtReal lhs = relative_entropy(x, m, ExtReal::of(p));
      ExtReal rhs = renyi_nonuniformity(x, ExtReal::of(p));
      REQUIRE(lhs.kind == rhs.kind);
      if (lhs.is_finite())
        CHECK(lhs.as_double() == doctest::Approx(rhs.as_double()).epsilon(1e-9));
    }
    ExtReal li = relative_entropy(x, m, ExtReal::inf());
    CHECK(li.as_double() ==
          doctest::Approx(renyi_nonuniformity(x, ExtReal::inf()).as_double())
              .epsilon(1e-9));
  }

  // H_{-inf} prices the largest uniform mixing weight: w <= min x_i/q_i.
  ExtReal h = relative_entropy(dist({"3/4", "1/4"}), uniform(2),
                               ExtReal::ninf());
  CHECK(h.as_double() == doctest::Approx(1.0).epsilon(1e-12));

  CHECK(relative_entropy(dist({"0.9", "0.1"}), dist({"0.9", "0.1"}),
                         ExtReal::of(1.0))
            .as_double() == doctest::Approx(0.0));

  CHECK_THROWS_AS(static_cast<void>(relative_entropy(
                      uniform(2), uniform(3), ExtReal::of(1.0))),
                  Error);
}

TEST_CASE("catalysis potentials f_r match their branch formulas") {
  CHECK(klimesh_f(dist({"1/2", "1/2"}), 2.0).as_double() ==
        doctest::Approx(std::log(0.5)).epsilon(1e-12));
  CHECK(klimesh_f(dist({"1/2", "1/2", "0"}), 0.0).is_inf());
  CHECK(klimesh_f(dist({"1", "0"}), 1.0).as_double() == doctest::Approx(0.0));
  // r in (0,1) flips the sign so that larger still means more ordered.
  CHECK(klimesh_f(dist({"0.9", "0.1"}), 0.5).as_double() ==
        doctest::Approx(-std::log(std::sqrt(0.9) + std::sqrt(0.1)))
            .epsilon(1e-12));
  // r = 0 on full support: -sum ln x_i.
  CHECK(klimesh_f(dist({"2/3", "1/3"}), 0.0).as_double() ==
        doctest::Approx(-std::log(2.0 / 9.0)).epsilon(1e-12));
  // r < 0 on full support: ln sum x^r.
  CHECK(klimesh_f(dist({"2/3", "1/3"}), -1.0).as_double() ==
        doctest::Approx(std::log(1.5 + 3.0)).epsilon(1e-12));
  CHECK(klimesh_f(dist({"2/3", "1/3", "0"}), -1.0).is_inf());
}

TEST_CASE("every monotone is non-increasing under sampled noisy channels") {
  test::Rng rng(777);
  for (int t = 0; t < 500; ++t) {
    int d_in = 2 + int(rng() % 5);
    int d_out = 2 + int(rng() % 5);
    Distribution x = test::random_distribution(rng, d_in);
    Channel c = random_noisy_channel(d_in, d_out, rng());
    Distribution y = apply_channel(c, x);
    for (const auto& m : zoo()) {
      double before = m.f(x);
      double after = m.f(y);
      // +inf before imposes nothing; +inf after requires +inf before.
      if (std::isinf(after)) {
        CHECK_MESSAGE(std::isinf(before), m.name);
      } else if (!std::isinf(before)) {
        CHECK_MESSAGE(after <= before + 1e-9, m.name);
      }
    }
    // Exact comparisons for the rational-valued members.
    CHECK(gini_exact(y) <= gini_exact(x));
    CHECK(schutz_exact(y) <= schutz_exact(x));
    for (int k = 1; k < 8; ++k)
      CHECK(lorenz_height_monotone(y, frac(k, 8)) <=
            lorenz_height_monotone(x, frac(k, 8)));
  }
}

TEST_CASE("padding with a uniform factor changes no monotone") {
  test::Rng rng(888);
  for (int t = 0; t < 25; ++t) {
    Distribution x = test::random_distribution(rng, 1 + int(rng() % 5));
    int pad = 2 + int(rng() % 7);
    Distribution xp = tensor_product(x, uniform(pad));
    for (const auto& m : zoo()) {
      double a = m.f(x), b = m.f(xp);
      if (std::isinf(a) || std::isinf(b)) {
        CHECK_MESSAGE(std::isinf(a) == std::isinf(b), m.name);
      } else {
        CHECK_MESSAGE(std::abs(a - b) <= 1e-9, m.name);
      }
    }
    CHECK(gini_exact(x) == gini_exact(xp));
    CHECK(schutz_exact(x) == schutz_exact(xp));
  }
}

TEST_CASE("renyi nonuniformity is additive over tensor products") {
  test::Rng rng(999);
  std::vector<ExtReal> orders = {ExtReal::of(-2.0), ExtReal::of(-1.0),
                                 ExtReal::of(0.0),  ExtReal::of(0.5),
                                 ExtReal::of(1.0),  ExtReal::of(2.0),
                                 ExtReal::inf()};
  for (int t = 0; t < 20; ++t) {
    Distribution x = test::random_distribution(rng, 2 + int(rng() % 4));
    Distribution y = test::random_distribution(rng, 2 + int(rng() % 4));
    Distribution xy = tensor_product(x, y);
    for (const ExtReal& p : orders) {
      ExtReal ix = renyi_nonuniformity(x, p);
      ExtReal iy = renyi_nonuniformity(y, p);
      ExtReal ixy = renyi_nonuniformity(xy, p);
      if (ix.is_inf() || iy.is_inf()) {
        CHECK(ixy.is_inf());
      } else {
        CHECK(ixy.as_double() ==
              doctest::Approx(ix.as_double() + iy.as_double()).epsilon(1e-9));
      }
    }
  }
}

TEST_CASE("orders sort the renyi family between I0 and Iinf") {
  test::Rng rng(1234);
  std::vector<double> ps = {0.25, 0.5, 1.0, 1.5, 2.0, 4.0, 16.0};
  for (int t = 0; t < 40; ++t) {
    Distribution x = test::random_distribution(rng, 2 + int(rng() % 6));
    double i0 = renyi_d(x, 0.0);
    double iinf = renyi_nonuniformity(x, ExtReal::inf()).as_double();
    double prev = i0;
    for (double p : ps) {
      double v = renyi_d(x, p);
      CHECK(v >= prev - 1e-9);
      CHECK(v <= iinf + 1e-9);
      prev = v;
    }
  }
}

TEST_CASE("I0 and Iinf are the edge limits of the renyi family") {
  test::Rng rng(4321);
  for (int t = 0; t < 15; ++t) {
    Distribution x = test::random_distribution(rng, 2 + int(rng() % 6));
    double i0 = renyi_d(x, 0.0);
    double iinf = renyi_nonuniformity(x, ExtReal::inf()).as_double();
    // Log-spaced descent toward p = 0: values decrease to I0.
    double prev = renyi_d(x, std::exp2(-2));
    for (int e = 3; e <= 20; ++e) {
      double v = renyi_d(x, std::exp2(-e));
      CHECK(v <= prev + 1e-12);
      CHECK(v >= i0 - 1e-12);
      prev = v;
    }
    CHECK(prev - i0 <= 1e-3);
    // Log-spaced ascent toward p = inf: values increase to Iinf.
    prev = renyi_d(x, std::exp2(2));
    for (int e = 3; e <= 20; ++e) {
      double v = renyi_d(x, std::exp2(e));
      CHECK(v >= prev - 1e-12);
      CHECK(v <= iinf + 1e-12);
      prev = v;
    }
    CHECK(iinf - prev <= 1e-3);
  }
}

TEST_CASE("schutz and gini are the curve's gap and area to the diagonal") {
  test::Rng rng(31337);
  for (int t = 0; t < 25; ++t) {
    Distribution x = test::random_distribution(rng, 2 + int(rng() % 6));
    LorenzCurve c = build_curve(x);
    int d = c.d;

    // Maximum vertical gap: the curve is concave and the diagonal
    // linear, so the maximum sits at an elbow.
    Rat gap(0);
    for (int k = 1; k <= d; ++k) {
      Rat g = c.S[k] - frac(k, d);
      if (g > gap) gap = g;
    }
    CHECK(gap == schutz_exact(x));

    // Area between curve and diagonal by trapezoid quadrature on the
    // elbow partition, exact for piecewise-linear integrands up to
    // floating-point rounding.
    double area = 0.0;
    for (int k = 1; k <= d; ++k) {
      double lo = rat_to_double(c.S[k - 1]);
      double hi = rat_to_double(c.S[k]);
      area += 0.5 * (lo + hi) / d;
    }
    area -= 0.5;  // subtract the area under the diagonal
    CHECK(area == doctest::Approx(gini(x)).epsilon(1e-9));
  }
}
