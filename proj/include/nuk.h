/* C interface to the nonuniformity toolkit.
 *
 * Conventions:
 *   - Every fallible function returns a status from nuk_status; 0 is
 *     success.  On failure, nuk_last_error() returns a thread-local
 *     human-readable detail string (valid until the next failing call
 *     on the same thread).
 *   - Objects behind opaque pointers are created by nuk_*_parse /
 *     nuk_*_build functions and released with the matching free.
 *   - Strings returned through char** are malloc'd; release them with
 *     nuk_string_free.
 *   - Extended-real results come as a (double value, int kind) pair;
 *     kind is one of the nuk_value_kind constants and the double is
 *     meaningful only when kind is NUK_FINITE.
 *   - Probabilities and weights cross the boundary as exact-rational
 *     strings ("3/4", "0.135") to avoid rounding at the interface.
 */

#ifndef NUK_H
#define NUK_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct nuk_dist nuk_dist;
typedef struct nuk_protocol nuk_protocol;

enum nuk_status {
  NUK_OK = 0,
  NUK_EPARSE = 1,
  NUK_ENEGATIVE = 2,
  NUK_ENOTNORMALIZED = 3,
  NUK_EDIMENSION = 4,
  NUK_EDOMAIN = 5,
  NUK_ERANGE = 6,
  NUK_ETRUNCATION = 7,
  NUK_EUNREALIZABLE = 8,
  NUK_ENOTCONVERTIBLE = 9,
  NUK_EMETRIC = 10,
  NUK_EBUDGET = 11,
  NUK_EINVAL = 12,
  NUK_ENULL = 13,
  NUK_EINTERNAL = 14
};

enum nuk_value_kind { NUK_FINITE = 0, NUK_PLUS_INF = 1, NUK_MINUS_INF = 2 };

enum nuk_metric { NUK_METRIC_TRACE = 0, NUK_METRIC_PURIFIED = 1 };

const char* nuk_status_message(int status);
const char* nuk_last_error(void);
void nuk_string_free(char* s);

/* ---- distributions ---- */

int nuk_dist_parse(const char* text, nuk_dist** out);
int nuk_dist_uniform(int d, nuk_dist** out);
int nuk_dist_sharp(long long d, long long d_u, nuk_dist** out);
void nuk_dist_free(nuk_dist* x);
int nuk_dist_dim(const nuk_dist* x);
int nuk_dist_format(const nuk_dist* x, char** out);
int nuk_dist_component(const nuk_dist* x, int i, char** out);
int nuk_dist_tensor(const nuk_dist* a, const nuk_dist* b, nuk_dist** out);
int nuk_dist_sorted(const nuk_dist* x, nuk_dist** out);

/* Smallest y with y (x) sharp(a/b) Lorenz-equivalent to x; a/b = 2^I. */
int nuk_dist_truncate(const nuk_dist* x, long long a, long long b,
                      nuk_dist** out);

/* ---- Lorenz geometry ---- */

/* CSV of curve breakpoints: u,v as decimals plus exact-rational columns. */
int nuk_curve_csv(const nuk_dist* x, int sig_digits, char** out);

/* Exact curve evaluation / histogram at a rational abscissa. */
int nuk_curve_eval(const nuk_dist* x, const char* u, char** v_out);
int nuk_rescaled_histogram(const nuk_dist* x, const char* v, char** h_out);

int nuk_ky_fan(const nuk_dist* x, int k, char** out);
int nuk_noisy_equivalent(const nuk_dist* x, const nuk_dist* y, int* eq);

/* SVG plot of one or two Lorenz curves (y may be NULL). */
int nuk_plot_svg(const nuk_dist* x, const nuk_dist* y, char** svg);

/* ---- conversion decisions ---- */

/* go: 1/0.  delta: min elbow gap (double and exact rational string).
 * failing_k: elbow attaining a negative gap, -1 when go. */
int nuk_decide(const nuk_dist* x, const nuk_dist* y, int* go, double* delta,
               char** delta_rat, int* failing_k);

/* lambda: the maximal sharp-state shift (see library docs); two_pow is
 * the exact rational 2^lambda.  kind_out: 'y' yield / 'c' cost /
 * 'e' equivalence.  lower/upper: monotone sandwich bounds. */
int nuk_cost_or_yield(const nuk_dist* x, const nuk_dist* y, double* lambda,
                      char** two_pow, char* kind_out, double* lower,
                      double* upper);

int nuk_distillable(const nuk_dist* x, long long* d, long long* d_u);
int nuk_formation_cost(const nuk_dist* x, double* value, char** two_pow);

/* ---- protocols ---- */

int nuk_synthesize(const nuk_dist* x, const nuk_dist* y, nuk_protocol** out);
void nuk_protocol_free(nuk_protocol* p);
int nuk_protocol_parse(const char* text, nuk_protocol** out);
int nuk_protocol_format(const nuk_protocol* p, char** out);
int nuk_protocol_steps(const nuk_protocol* p);
int nuk_protocol_dims(const nuk_protocol* p, long long* d_common,
                      long long* ancilla_in, long long* ancilla_out);
int nuk_verify_protocol(const nuk_protocol* p, const nuk_dist* x,
                        const nuk_dist* y, int* ok);

/* ---- monotones ---- */

/* name: "shannon-entropy", "shannon", "burg", "gini", "schutz", "amato",
 * "geometric".  Result as extended real. */
int nuk_monotone(const nuk_dist* x, const char* name, double* value,
                 int* kind);

/* Order-p families.  p_kind selects finite / +inf / -inf order. */
int nuk_renyi(const nuk_dist* x, double p, int p_kind, double* value,
              int* kind);
int nuk_tsallis(const nuk_dist* x, double p, double* value, int* kind);
int nuk_relative_entropy(const nuk_dist* x, const nuk_dist* q, double p,
                         int p_kind, double* value, int* kind);
int nuk_klimesh_f(const nuk_dist* x, double r, double* value, int* kind);

int nuk_lorenz_height(const nuk_dist* x, const char* u, char** out);

/* ---- catalysis ---- */

int nuk_trumps(const nuk_dist* x, const nuk_dist* y, int strong, int* trumps,
               double* lambda_cat, int* lambda_kind, double* argmin_p,
               int* argmin_kind, int* boundary);
int nuk_trump_report(const nuk_dist* x, const nuk_dist* y, int strong,
                     int sig_digits, char** text);
int nuk_verify_catalyst(const nuk_dist* x, const nuk_dist* y,
                        const nuk_dist* z, int* ok);
int nuk_catalytic_cost_or_yield(const nuk_dist* x, const nuk_dist* y,
                                double* lambda, char** two_pow, char* kind_out,
                                double* lower, double* upper);

/* ---- smoothing ---- */

int nuk_distance(const nuk_dist* x, const nuk_dist* y, int metric,
                 double* out);
int nuk_h0_eps(const nuk_dist* x, double eps, int metric, double* out);
int nuk_iinf_eps(const nuk_dist* x, double eps, int metric, double* out);
int nuk_j0_eps(const nuk_dist* x, double eps, int metric, double* out);
int nuk_approx_formation(const nuk_dist* x, double eps, double* out);
int nuk_approx_distill(const nuk_dist* x, double eps, double* achievable,
                       double* optimal);

/* verdict: 1 sufficient, -1 necessary-violated, 0 undetermined. */
int nuk_approx_convert_check(const nuk_dist* x, const nuk_dist* y, double eps,
                             int* verdict);

/* kind selects the experiment: 0 rate, 1 cost/yield.  Returns the CSV
 * table ("n,m_n,ratio,predicted"), the final-row ratio, the predicted
 * asymptote, and for cost experiments the regime in kind_out ('c'/'y'). */
int nuk_experiment_csv(const nuk_dist* x, const nuk_dist* y, double eps,
                       int n_max, int kind, int sig_digits, char** csv,
                       double* final_ratio, double* predicted, char* kind_out);

#ifdef __cplusplus
}
#endif

#endif /* NUK_H */
