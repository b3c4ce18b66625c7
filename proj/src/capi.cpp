#include "nuk.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "nuk/catalysis.hpp"
#include "nuk/conversion.hpp"
#include "nuk/distribution.hpp"
#include "nuk/error.hpp"
#include "nuk/io.hpp"
#include "nuk/lorenz.hpp"
#include "nuk/monotones.hpp"
#include "nuk/smoothing.hpp"

struct nuk_dist {
  nuk::Distribution d;
};

struct nuk_protocol {
  nuk::Protocol p;
};

namespace {

thread_local std::string g_last_error;

int map_code(nuk::Err c) {
  switch (c) {
    case nuk::Err::parse:
      return NUK_EPARSE;
    case nuk::Err::negative_component:
      return NUK_ENEGATIVE;
    case nuk::Err::not_normalized:
      return NUK_ENOTNORMALIZED;
    case nuk::Err::dimension_mismatch:
      return NUK_EDIMENSION;
    case nuk::Err::out_of_domain:
      return NUK_EDOMAIN;
    case nuk::Err::out_of_range:
      return NUK_ERANGE;
    case nuk::Err::too_much_truncation:
      return NUK_ETRUNCATION;
    case nuk::Err::not_realizable:
      return NUK_EUNREALIZABLE;
    case nuk::Err::not_convertible:
      return NUK_ENOTCONVERTIBLE;
    case nuk::Err::unsupported_metric:
      return NUK_EMETRIC;
    case nuk::Err::budget_exceeded:
      return NUK_EBUDGET;
    case nuk::Err::invalid_argument:
      return NUK_EINVAL;
  }
  return NUK_EINTERNAL;
}

template <typename F>
int wrap(F&& body) {
  try {
    body();
    return NUK_OK;
  } catch (const nuk::Error& e) {
    g_last_error = e.what();
    return map_code(e.code);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return NUK_EINTERNAL;
  } catch (...) {
    g_last_error = "unknown failure";
    return NUK_EINTERNAL;
  }
}

int null_arg(const char* what) {
  g_last_error = std::string("null argument: ") + what;
  return NUK_ENULL;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void put_ext(const nuk::ExtReal& e, double* value, int* kind) {
  switch (e.kind) {
    case nuk::ExtReal::Kind::finite:
      *kind = NUK_FINITE;
      *value = e.v;
      break;
    case nuk::ExtReal::Kind::plus_inf:
      *kind = NUK_PLUS_INF;
      *value = 0.0;
      break;
    case nuk::ExtReal::Kind::minus_inf:
      *kind = NUK_MINUS_INF;
      *value = 0.0;
      break;
  }
}

nuk::ExtReal ext_arg(double v, int kind) {
  switch (kind) {
    case NUK_PLUS_INF:
      return nuk::ExtReal::inf();
    case NUK_MINUS_INF:
      return nuk::ExtReal::ninf();
    case NUK_FINITE:
      return nuk::ExtReal::of(v);
    default:
      nuk::fail(nuk::Err::invalid_argument, "bad extended-real kind");
  }
}

nuk::Metric metric_arg(int m) {
  switch (m) {
    case NUK_METRIC_TRACE:
      return nuk::Metric::trace;
    case NUK_METRIC_PURIFIED:
      return nuk::Metric::purified;
    default:
      nuk::fail(nuk::Err::invalid_argument, "bad metric selector");
  }
}

double ext_to_double(const nuk::ExtReal& e) { return e.as_double(); }

}  // namespace

extern "C" {

const char* nuk_status_message(int status) {
  switch (status) {
    case NUK_OK:
      return "ok";
    case NUK_EPARSE:
      return "parse error";
    case NUK_ENEGATIVE:
      return "negative component";
    case NUK_ENOTNORMALIZED:
      return "components do not sum to 1";
    case NUK_EDIMENSION:
      return "dimension mismatch";
    case NUK_EDOMAIN:
      return "argument outside the mathematical domain";
    case NUK_ERANGE:
      return "result out of representable range";
    case NUK_ETRUNCATION:
      return "requested truncation exceeds the distillable part";
    case NUK_EUNREALIZABLE:
      return "internal consistency check failed";
    case NUK_ENOTCONVERTIBLE:
      return "conversion is infeasible";
    case NUK_EMETRIC:
      return "unsupported metric";
    case NUK_EBUDGET:
      return "computation budget exceeded";
    case NUK_EINVAL:
      return "invalid argument";
    case NUK_ENULL:
      return "null pointer argument";
    case NUK_EINTERNAL:
      return "internal error";
    default:
      return "unknown status";
  }
}

const char* nuk_last_error(void) { return g_last_error.c_str(); }

void nuk_string_free(char* s) { std::free(s); }

/* ---- distributions ---- */

int nuk_dist_parse(const char* text, nuk_dist** out) {
  if (!text) return null_arg("text");
  if (!out) return null_arg("out");
  return wrap([&] { *out = new nuk_dist{nuk::parse_distribution(text)}; });
}

int nuk_dist_uniform(int d, nuk_dist** out) {
  if (!out) return null_arg("out");
  return wrap([&] { *out = new nuk_dist{nuk::uniform(d)}; });
}

int nuk_dist_sharp(long long d, long long d_u, nuk_dist** out) {
  if (!out) return null_arg("out");
  return wrap([&] { *out = new nuk_dist{nuk::SharpSpec{d, d_u}.state()}; });
}

void nuk_dist_free(nuk_dist* x) { delete x; }

int nuk_dist_dim(const nuk_dist* x) { return x ? x->d.dim() : 0; }

int nuk_dist_format(const nuk_dist* x, char** out) {
  if (!x) return null_arg("x");
  if (!out) return null_arg("out");
  return wrap([&] { *out = dup_string(nuk::format_distribution(x->d)); });
}

int nuk_dist_component(const nuk_dist* x, int i, char** out) {
  if (!x) return null_arg("x");
  if (!out) return null_arg("out");
  return wrap([&] {
    if (i < 0 || i >= x->d.dim())
      nuk::fail(nuk::Err::out_of_range, "component index out of range");
    *out = dup_string(nuk::rat_to_string(x->d.p[i]));
  });
}

int nuk_dist_tensor(const nuk_dist* a, const nuk_dist* b, nuk_dist** out) {
  if (!a) return null_arg("a");
  if (!b) return null_arg("b");
  if (!out) return null_arg("out");
  return wrap(
      [&] { *out = new nuk_dist{nuk::tensor_product(a->d, b->d)}; });
}

int nuk_dist_sorted(const nuk_dist* x, nuk_dist** out) {
  if (!x) return null_arg("x");
  if (!out) return null_arg("out");
  return wrap([&] { *out = new nuk_dist{nuk::sort_descending(x->d)}; });
}

int nuk_dist_truncate(const nuk_dist* x, long long a, long long b,
                      nuk_dist** out) {
  if (!x) return null_arg("x");
  if (!out) return null_arg("out");
  return wrap([&] { *out = new nuk_dist{nuk::truncate(x->d, a, b)}; });
}

/* ---- Lorenz geometry ---- */

int nuk_curve_csv(const nuk_dist* x, int sig_digits, char** out) {
  if (!x) return null_arg("x");
  if (!out) return null_arg("out");
  return wrap([&] {
    *out = dup_string(nuk::curve_csv(nuk::build_curve(x->d), sig_digits));
  });
}

int nuk_curve_eval(const nuk_dist* x, const char* u, char** v_out) {
  if (!x) return null_arg("x");
  if (!u) return null_arg("u");
  if (!v_out) return null_arg("v_out");
  return wrap([&] {
    nuk::Rat uu = nuk::rat_from_string(u);
    *v_out = dup_string(
        nuk::rat_to_string(nuk::eval_curve(nuk::build_curve(x->d), uu)));
  });
}

int nuk_rescaled_histogram(const nuk_dist* x, const char* v, char** h_out) {
  if (!x) return null_arg("x");
  if (!v) return null_arg("v");
  if (!h_out) return null_arg("h_out");
  return wrap([&] {
    nuk::Rat vv = nuk::rat_from_string(v);
    *h_out = dup_string(nuk::rat_to_string(nuk::rescaled_histogram(x->d, vv)));
  });
}

int nuk_ky_fan(const nuk_dist* x, int k, char** out) {
  if (!x) return null_arg("x");
  if (!out) return null_arg("out");
  return wrap(
      [&] { *out = dup_string(nuk::rat_to_string(nuk::ky_fan(x->d, k))); });
}

int nuk_noisy_equivalent(const nuk_dist* x, const nuk_dist* y, int* eq) {
  if (!x) return null_arg("x");
  if (!y) return null_arg("y");
  if (!eq) return null_arg("eq");
  return wrap([&] { *eq = nuk::noisy_equivalent(x->d, y->d) ? 1 : 0; });
}

int nuk_plot_svg(const nuk_dist* x, const nuk_dist* y, char** svg) {
  if (!x) return null_arg("x");
  if (!svg) return null_arg("svg");
  return wrap([&] {
    *svg = dup_string(nuk::curves_svg(x->d, y ? &y->d : nullptr));
  });
}

/* ---- conversion decisions ---- */

int nuk_decide(const nuk_dist* x, const nuk_dist* y, int* go, double* delta,
               char** delta_rat, int* failing_k) {
  if (!x) return null_arg("x");
  if (!y) return null_arg("y");
  if (!go) return null_arg("go");
  if (!delta) return null_arg("delta");
  if (!delta_rat) return null_arg("delta_rat");
  if (!failing_k) return null_arg("failing_k");
  return wrap([&] {
    nuk::WitnessReport r = nuk::decide(x->d, y->d);
    *go = r.go ? 1 : 0;
    *delta = r.delta;
    *delta_rat = dup_string(nuk::rat_to_string(r.delta_exact));
    *failing_k = r.go ? -1 : r.failing_k;
  });
}

int nuk_cost_or_yield(const nuk_dist* x, const nuk_dist* y, double* lambda,
                      char** two_pow, char* kind_out, double* lower,
                      double* upper) {
  if (!x) return null_arg("x");
  if (!y) return null_arg("y");
  if (!lambda) return null_arg("lambda");
  if (!two_pow) return null_arg("two_pow");
  if (!kind_out) return null_arg("kind_out");
  if (!lower) return null_arg("lower");
  if (!upper) return null_arg("upper");
  return wrap([&] {
    nuk::CostYieldReport r = nuk::cost_or_yield(x->d, y->d);
    *lambda = ext_to_double(r.lambda);
    *two_pow = dup_string(nuk::rat_to_string(r.two_to_lambda));
    *kind_out = r.kind == nuk::CostYieldReport::yield  ? 'y'
                : r.kind == nuk::CostYieldReport::cost ? 'c'
                                                       : 'e';
    *lower = ext_to_double(r.lower);
    *upper = ext_to_double(r.upper);
  });
}

int nuk_distillable(const nuk_dist* x, long long* d, long long* d_u) {
  if (!x) return null_arg("x");
  if (!d) return null_arg("d");
  if (!d_u) return null_arg("d_u");
  return wrap([&] {
    nuk::SharpSpec s = nuk::distillable(x->d);
    *d = s.d;
    *d_u = s.d_u;
  });
}

int nuk_formation_cost(const nuk_dist* x, double* value, char** two_pow) {
  if (!x) return null_arg("x");
  if (!value) return null_arg("value");
  if (!two_pow) return null_arg("two_pow");
  return wrap([&] {
    nuk::FormationCost c = nuk::formation_cost(x->d);
    *value = c.value;
    *two_pow = dup_string(nuk::rat_to_string(c.two_pow));
  });
}

/* ---- protocols ---- */

int nuk_synthesize(const nuk_dist* x, const nuk_dist* y, nuk_protocol** out) {
  if (!x) return null_arg("x");
  if (!y) return null_arg("y");
  if (!out) return null_arg("out");
  return wrap(
      [&] { *out = new nuk_protocol{nuk::synthesize(x->d, y->d)}; });
}

void nuk_protocol_free(nuk_protocol* p) { delete p; }

int nuk_protocol_parse(const char* text, nuk_protocol** out) {
  if (!text) return null_arg("text");
  if (!out) return null_arg("out");
  return wrap([&] { *out = new nuk_protocol{nuk::parse_protocol(text)}; });
}

int nuk_protocol_format(const nuk_protocol* p, char** out) {
  if (!p) return null_arg("p");
  if (!out) return null_arg("out");
  return wrap([&] { *out = dup_string(nuk::format_protocol(p->p)); });
}

int nuk_protocol_steps(const nuk_protocol* p) {
  return p ? static_cast<int>(p->p.steps.size()) : 0;
}

int nuk_protocol_dims(const nuk_protocol* p, long long* d_common,
                      long long* ancilla_in, long long* ancilla_out) {
  if (!p) return null_arg("p");
  if (!d_common) return null_arg("d_common");
  if (!ancilla_in) return null_arg("ancilla_in");
  if (!ancilla_out) return null_arg("ancilla_out");
  *d_common = p->p.d_common;
  *ancilla_in = p->p.ancilla_in;
  *ancilla_out = p->p.ancilla_out;
  return NUK_OK;
}

int nuk_verify_protocol(const nuk_protocol* p, const nuk_dist* x,
                        const nuk_dist* y, int* ok) {
  if (!p) return null_arg("p");
  if (!x) return null_arg("x");
  if (!y) return null_arg("y");
  if (!ok) return null_arg("ok");
  return wrap(
      [&] { *ok = nuk::verify_protocol(p->p, x->d, y->d) ? 1 : 0; });
}

/* ---- monotones ---- */

int nuk_monotone(const nuk_dist* x, const char* name, double* value,
                 int* kind) {
  if (!x) return null_arg("x");
  if (!name) return null_arg("name");
  if (!value) return null_arg("value");
  if (!kind) return null_arg("kind");
  return wrap([&] {
    std::string n = name;
    *kind = NUK_FINITE;
    if (n == "shannon-entropy")
      *value = nuk::shannon_entropy(x->d);
    else if (n == "shannon")
      *value = nuk::shannon_nonuniformity(x->d);
    else if (n == "burg")
      put_ext(nuk::burg_nonuniformity(x->d), value, kind);
    else if (n == "gini")
      *value = nuk::gini(x->d);
    else if (n == "schutz")
      *value = nuk::schutz(x->d);
    else if (n == "amato")
      *value = nuk::amato(x->d);
    else if (n == "geometric")
      *value = nuk::geometric_nonuniformity(x->d);
    else
      nuk::fail(nuk::Err::invalid_argument, "unknown monotone '" + n + "'");
  });
}

int nuk_renyi(const nuk_dist* x, double p, int p_kind, double* value,
              int* kind) {
  if (!x) return null_arg("x");
  if (!value) return null_arg("value");
  if (!kind) return null_arg("kind");
  return wrap([&] {
    put_ext(nuk::renyi_nonuniformity(x->d, ext_arg(p, p_kind)), value, kind);
  });
}

int nuk_tsallis(const nuk_dist* x, double p, double* value, int* kind) {
  if (!x) return null_arg("x");
  if (!value) return null_arg("value");
  if (!kind) return null_arg("kind");
  return wrap(
      [&] { put_ext(nuk::tsallis_nonuniformity(x->d, p), value, kind); });
}

int nuk_relative_entropy(const nuk_dist* x, const nuk_dist* q, double p,
                         int p_kind, double* value, int* kind) {
  if (!x) return null_arg("x");
  if (!q) return null_arg("q");
  if (!value) return null_arg("value");
  if (!kind) return null_arg("kind");
  return wrap([&] {
    put_ext(nuk::relative_entropy(x->d, q->d, ext_arg(p, p_kind)), value,
            kind);
  });
}

int nuk_klimesh_f(const nuk_dist* x, double r, double* value, int* kind) {
  if (!x) return null_arg("x");
  if (!value) return null_arg("value");
  if (!kind) return null_arg("kind");
  return wrap([&] { put_ext(nuk::klimesh_f(x->d, r), value, kind); });
}

int nuk_lorenz_height(const nuk_dist* x, const char* u, char** out) {
  if (!x) return null_arg("x");
  if (!u) return null_arg("u");
  if (!out) return null_arg("out");
  return wrap([&] {
    nuk::Rat uu = nuk::rat_from_string(u);
    *out = dup_string(nuk::rat_to_string(nuk::lorenz_height_monotone(x->d, uu)));
  });
}

/* ---- catalysis ---- */

int nuk_trumps(const nuk_dist* x, const nuk_dist* y, int strong, int* trumps,
               double* lambda_cat, int* lambda_kind, double* argmin_p,
               int* argmin_kind, int* boundary) {
  if (!x) return null_arg("x");
  if (!y) return null_arg("y");
  if (!trumps) return null_arg("trumps");
  if (!lambda_cat) return null_arg("lambda_cat");
  if (!lambda_kind) return null_arg("lambda_kind");
  if (!argmin_p) return null_arg("argmin_p");
  if (!argmin_kind) return null_arg("argmin_kind");
  if (!boundary) return null_arg("boundary");
  return wrap([&] {
    nuk::TrumpingReport r = strong ? nuk::strong_noisy_trumps(x->d, y->d)
                                   : nuk::noisy_trumps(x->d, y->d);
    *trumps = r.trumps ? 1 : 0;
    put_ext(r.lambda_cat, lambda_cat, lambda_kind);
    put_ext(r.argmin_p, argmin_p, argmin_kind);
    *boundary = r.boundary ? 1 : 0;
  });
}

int nuk_trump_report(const nuk_dist* x, const nuk_dist* y, int strong,
                     int sig_digits, char** text) {
  if (!x) return null_arg("x");
  if (!y) return null_arg("y");
  if (!text) return null_arg("text");
  return wrap([&] {
    nuk::TrumpingReport r = strong ? nuk::strong_noisy_trumps(x->d, y->d)
                                   : nuk::noisy_trumps(x->d, y->d);
    *text = dup_string(nuk::render_trumping_report(r, sig_digits));
  });
}

int nuk_verify_catalyst(const nuk_dist* x, const nuk_dist* y,
                        const nuk_dist* z, int* ok) {
  if (!x) return null_arg("x");
  if (!y) return null_arg("y");
  if (!z) return null_arg("z");
  if (!ok) return null_arg("ok");
  return wrap(
      [&] { *ok = nuk::verify_catalyst(x->d, y->d, z->d) ? 1 : 0; });
}

int nuk_catalytic_cost_or_yield(const nuk_dist* x, const nuk_dist* y,
                                double* lambda, char** two_pow, char* kind_out,
                                double* lower, double* upper) {
  if (!x) return null_arg("x");
  if (!y) return null_arg("y");
  if (!lambda) return null_arg("lambda");
  if (!two_pow) return null_arg("two_pow");
  if (!kind_out) return null_arg("kind_out");
  if (!lower) return null_arg("lower");
  if (!upper) return null_arg("upper");
  return wrap([&] {
    nuk::CostYieldReport r = nuk::catalytic_cost_or_yield(x->d, y->d);
    *lambda = ext_to_double(r.lambda);
    *two_pow = dup_string(nuk::rat_to_string(r.two_to_lambda));
    *kind_out = r.kind == nuk::CostYieldReport::yield  ? 'y'
                : r.kind == nuk::CostYieldReport::cost ? 'c'
                                                       : 'e';
    *lower = ext_to_double(r.lower);
    *upper = ext_to_double(r.upper);
  });
}

/* ---- smoothing ---- */

int nuk_distance(const nuk_dist* x, const nuk_dist* y, int metric,
                 double* out) {
  if (!x) return null_arg("x");
  if (!y) return null_arg("y");
  if (!out) return null_arg("out");
  return wrap([&] { *out = nuk::distance(x->d, y->d, metric_arg(metric)); });
}

int nuk_h0_eps(const nuk_dist* x, double eps, int metric, double* out) {
  if (!x) return null_arg("x");
  if (!out) return null_arg("out");
  return wrap([&] { *out = nuk::h0_eps(x->d, eps, metric_arg(metric)); });
}

int nuk_iinf_eps(const nuk_dist* x, double eps, int metric, double* out) {
  if (!x) return null_arg("x");
  if (!out) return null_arg("out");
  return wrap([&] { *out = nuk::iinf_eps(x->d, eps, metric_arg(metric)); });
}

int nuk_j0_eps(const nuk_dist* x, double eps, int metric, double* out) {
  if (!x) return null_arg("x");
  if (!out) return null_arg("out");
  return wrap([&] { *out = nuk::j0_eps(x->d, eps, metric_arg(metric)); });
}

int nuk_approx_formation(const nuk_dist* x, double eps, double* out) {
  if (!x) return null_arg("x");
  if (!out) return null_arg("out");
  return wrap([&] { *out = nuk::approx_formation(x->d, eps); });
}

int nuk_approx_distill(const nuk_dist* x, double eps, double* achievable,
                       double* optimal) {
  if (!x) return null_arg("x");
  if (!achievable) return null_arg("achievable");
  if (!optimal) return null_arg("optimal");
  return wrap([&] {
    nuk::DistillReport r = nuk::approx_distill(x->d, eps);
    *achievable = r.achievable;
    *optimal = r.optimal;
  });
}

int nuk_approx_convert_check(const nuk_dist* x, const nuk_dist* y, double eps,
                             int* verdict) {
  if (!x) return null_arg("x");
  if (!y) return null_arg("y");
  if (!verdict) return null_arg("verdict");
  return wrap([&] {
    switch (nuk::approx_convert_check(x->d, y->d, eps)) {
      case nuk::ConvertCheck::sufficient:
        *verdict = 1;
        break;
      case nuk::ConvertCheck::necessary_violated:
        *verdict = -1;
        break;
      case nuk::ConvertCheck::undetermined:
        *verdict = 0;
        break;
    }
  });
}

int nuk_experiment_csv(const nuk_dist* x, const nuk_dist* y, double eps,
                       int n_max, int kind, int sig_digits, char** csv,
                       double* final_ratio, double* predicted,
                       char* kind_out) {
  if (!x) return null_arg("x");
  if (!y) return null_arg("y");
  if (!csv) return null_arg("csv");
  if (!final_ratio) return null_arg("final_ratio");
  if (!predicted) return null_arg("predicted");
  if (!kind_out) return null_arg("kind_out");
  return wrap([&] {
    nuk::RateExperiment e =
        kind == 0 ? nuk::asymptotic_rate_experiment(x->d, y->d, eps, n_max)
                  : nuk::asymptotic_cost_experiment(x->d, y->d, eps, n_max);
    *csv = dup_string(nuk::experiment_csv(e, sig_digits));
    *final_ratio = e.rows.empty() ? 0.0 : e.rows.back().ratio;
    *predicted = e.predicted_rate;
    *kind_out = e.kind == nuk::RateExperiment::rate    ? 'r'
                : e.kind == nuk::RateExperiment::cost  ? 'c'
                                                       : 'y';
  });
}

}  // extern "C"
