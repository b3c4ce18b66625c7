// Command-line front end for the nonuniformity toolkit.  Talks to the
// library exclusively through the C interface in nuk.h.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nuk.h"

namespace {

int g_precision = 9;

[[noreturn]] void die(int code, const std::string& msg) {
  std::fprintf(stderr, "error: %s\n", msg.c_str());
  std::exit(code);
}

// Library failures are input errors from the CLI's point of view, except
// infeasible conversions, which get the scriptable no-go exit when
// --strict is in force.
void check(int status, bool strict_nogo = false) {
  if (status == NUK_OK) return;
  int code = 1;
  if (status == NUK_ENOTCONVERTIBLE && strict_nogo) code = 2;
  die(code, std::string(nuk_last_error()) + " [" +
                nuk_status_message(status) + "]");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) die(1, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) die(1, "cannot write '" + path + "'");
  out << content;
  if (!out.flush()) die(1, "failed writing '" + path + "'");
}

struct DistDeleter {
  void operator()(nuk_dist* d) const { nuk_dist_free(d); }
};
using DistPtr = std::unique_ptr<nuk_dist, DistDeleter>;

DistPtr load_dist(const std::string& path) {
  std::string text = read_file(path);
  nuk_dist* d = nullptr;
  int st = nuk_dist_parse(text.c_str(), &d);
  if (st != NUK_OK) die(1, path + ": " + nuk_last_error());
  return DistPtr(d);
}

struct OwnedString {
  char* s = nullptr;
  ~OwnedString() { nuk_string_free(s); }
  const char* get() const { return s ? s : ""; }
};

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", g_precision, v);
  return buf;
}

std::string fmt_ext(double v, int kind) {
  if (kind == NUK_PLUS_INF) return "inf";
  if (kind == NUK_MINUS_INF) return "-inf";
  return fmt(v);
}

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty())
    std::fputs(content.c_str(), stdout);
  else
    write_file(out_path, content);
}

const char* kind_word(char k) {
  switch (k) {
    case 'y':
      return "yield";
    case 'c':
      return "cost";
    default:
      return "equivalence";
  }
}

// p-list entries: finite reals or "inf" / "-inf".
struct PValue {
  double p = 0.0;
  int kind = NUK_FINITE;
  std::string label;
};

std::vector<PValue> parse_p_list(const std::string& list) {
  std::vector<PValue> out;
  std::stringstream ss(list);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    size_t a = tok.find_first_not_of(" \t");
    if (a == std::string::npos) continue;
    size_t b = tok.find_last_not_of(" \t");
    tok = tok.substr(a, b - a + 1);
    PValue v;
    v.label = tok;
    if (tok == "inf" || tok == "+inf") {
      v.kind = NUK_PLUS_INF;
    } else if (tok == "-inf") {
      v.kind = NUK_MINUS_INF;
    } else {
      char* end = nullptr;
      v.p = std::strtod(tok.c_str(), &end);
      if (end == tok.c_str() || *end != '\0')
        die(64, "bad order parameter '" + tok + "' in --p");
    }
    out.push_back(std::move(v));
  }
  if (out.empty()) die(64, "--p lists no orders");
  return out;
}

void run_monotones(const std::string& x_path, const std::string& p_list,
                   const std::string& out_path) {
  DistPtr x = load_dist(x_path);
  struct Row {
    std::string name, p, value;
  };
  std::vector<Row> rows;

  auto add_named = [&](const char* name) {
    double v = 0.0;
    int kind = NUK_FINITE;
    check(nuk_monotone(x.get(), name, &v, &kind));
    rows.push_back({name, "", fmt_ext(v, kind)});
  };

  std::vector<PValue> ps;
  if (p_list.empty()) {
    add_named("shannon-entropy");
    add_named("shannon");
    add_named("burg");
    add_named("gini");
    add_named("schutz");
    add_named("amato");
    add_named("geometric");
    ps = parse_p_list("0,1,2,inf");
  } else {
    ps = parse_p_list(p_list);
  }
  for (const PValue& pv : ps) {
    double v = 0.0;
    int kind = NUK_FINITE;
    check(nuk_renyi(x.get(), pv.p, pv.kind, &v, &kind));
    rows.push_back({"renyi", pv.label, fmt_ext(v, kind)});
  }

  if (!out_path.empty()) {
    std::string csv = "name,p,value\n";
    for (const Row& r : rows)
      csv += r.name + "," + r.p + "," + r.value + "\n";
    write_file(out_path, csv);
    return;
  }
  size_t w = 0;
  for (const Row& r : rows) w = std::max(w, r.name.size());
  for (const Row& r : rows)
    std::printf("%-*s  %-6s %s\n", static_cast<int>(w), r.name.c_str(),
                r.p.empty() ? "-" : r.p.c_str(), r.value.c_str());
}

int run_decide(const std::string& x_path, const std::string& y_path,
               bool strict) {
  DistPtr x = load_dist(x_path), y = load_dist(y_path);
  int go = 0, failing_k = -1;
  double delta = 0.0;
  OwnedString delta_rat;
  check(nuk_decide(x.get(), y.get(), &go, &delta, &delta_rat.s, &failing_k));

  double lambda = 0.0, lo = 0.0, hi = 0.0;
  OwnedString two_pow;
  char kind = 'e';
  check(nuk_cost_or_yield(x.get(), y.get(), &lambda, &two_pow.s, &kind, &lo,
                          &hi));
  if (go)
    std::printf("GO \xce\x94=%s\n", delta_rat.get());
  else
    std::printf("NO-GO \xce\x94=%s at k=%d\n", delta_rat.get(), failing_k);
  std::printf("lambda = %s (2^lambda = %s, %s)\n", fmt(lambda).c_str(),
              two_pow.get(), kind_word(kind));
  return (!go && strict) ? 2 : 0;
}

void run_witness(const std::string& x_path, const std::string& y_path) {
  DistPtr x = load_dist(x_path), y = load_dist(y_path);
  double lambda = 0.0, lo = 0.0, hi = 0.0;
  OwnedString two_pow;
  char kind = 'e';
  check(nuk_cost_or_yield(x.get(), y.get(), &lambda, &two_pow.s, &kind, &lo,
                          &hi));
  std::printf("kind     = %s\n", kind_word(kind));
  std::printf("lambda   = %s\n", fmt(lambda).c_str());
  std::printf("2^lambda = %s (exact)\n", two_pow.get());
  std::printf("bounds   = [%s, %s]\n", fmt(lo).c_str(), fmt(hi).c_str());
}

int run_protocol(const std::string& x_path, const std::string& y_path,
                 const std::string& out_path, bool strict) {
  DistPtr x = load_dist(x_path), y = load_dist(y_path);
  nuk_protocol* p = nullptr;
  check(nuk_synthesize(x.get(), y.get(), &p), strict);
  OwnedString text;
  int st = nuk_protocol_format(p, &text.s);
  if (st != NUK_OK) {
    nuk_protocol_free(p);
    check(st);
  }
  int ok = 0;
  st = nuk_verify_protocol(p, x.get(), y.get(), &ok);
  long long d_common = 0, a_in = 0, a_out = 0;
  nuk_protocol_dims(p, &d_common, &a_in, &a_out);
  int steps = nuk_protocol_steps(p);
  nuk_protocol_free(p);
  check(st);
  if (!ok) die(1, "synthesized protocol failed replay verification");
  emit(out_path, text.get());
  if (!out_path.empty())
    std::printf("protocol: d_common=%lld, %d steps, replay verified\n",
                d_common, steps);
  return 0;
}

void run_trump(const std::string& x_path, const std::string& y_path,
               const std::string& z_path, bool strong) {
  DistPtr x = load_dist(x_path), y = load_dist(y_path);
  OwnedString text;
  check(nuk_trump_report(x.get(), y.get(), strong ? 1 : 0, g_precision,
                         &text.s));
  std::fputs(text.get(), stdout);
  if (!z_path.empty()) {
    DistPtr z = load_dist(z_path);
    int ok = 0;
    check(nuk_verify_catalyst(x.get(), y.get(), z.get(), &ok));
    std::printf("catalyst %s: %s\n", z_path.c_str(),
                ok ? "enables the conversion" : "does not help");
  }
}

void run_smooth(const std::string& x_path, double eps,
                const std::string& metric) {
  DistPtr x = load_dist(x_path);
  int m = NUK_METRIC_TRACE;
  if (metric == "purified")
    m = NUK_METRIC_PURIFIED;
  else if (metric != "trace")
    die(64, "unknown metric '" + metric + "' (trace or purified)");
  double h0 = 0.0, iinf = 0.0, j0 = 0.0;
  check(nuk_h0_eps(x.get(), eps, m, &h0));
  check(nuk_iinf_eps(x.get(), eps, m, &iinf));
  check(nuk_j0_eps(x.get(), eps, m, &j0));
  double logd = std::log2(static_cast<double>(nuk_dist_dim(x.get())));
  std::printf("H0_eps   = %s\n", fmt(h0).c_str());
  std::printf("I0_eps   = %s\n", fmt(logd - h0).c_str());
  std::printf("Iinf_eps = %s\n", fmt(iinf).c_str());
  std::printf("J0_eps   = %s\n", fmt(j0).c_str());
}

void run_distill(const std::string& x_path, double eps, bool have_eps) {
  DistPtr x = load_dist(x_path);
  if (!have_eps) {
    long long d = 0, d_u = 0;
    check(nuk_distillable(x.get(), &d, &d_u));
    double i0 = std::log2(static_cast<double>(d) / static_cast<double>(d_u));
    std::printf("distillable sharp state: d=%lld, d_u=%lld (I = %s)\n", d,
                d_u, fmt(i0).c_str());
    return;
  }
  double ach = 0.0, opt = 0.0;
  check(nuk_approx_distill(x.get(), eps, &ach, &opt));
  std::printf("achievable = %s\n", fmt(ach).c_str());
  std::printf("optimal    = %s\n", fmt(opt).c_str());
}

void run_form(const std::string& x_path, double eps, bool have_eps) {
  DistPtr x = load_dist(x_path);
  if (!have_eps) {
    double value = 0.0;
    OwnedString two_pow;
    check(nuk_formation_cost(x.get(), &value, &two_pow.s));
    std::printf("formation cost = %s (2^I = %s)\n", fmt(value).c_str(),
                two_pow.get());
    return;
  }
  double v = 0.0;
  check(nuk_approx_formation(x.get(), eps, &v));
  std::printf("approximate formation cost = %s\n", fmt(v).c_str());
}

void run_experiment(int kind, const std::string& x_path,
                    const std::string& y_path, double eps, int n_max,
                    const std::string& out_path) {
  DistPtr x = load_dist(x_path), y = load_dist(y_path);
  OwnedString csv;
  double final_ratio = 0.0, predicted = 0.0;
  char regime = 'r';
  check(nuk_experiment_csv(x.get(), y.get(), eps, n_max, kind, g_precision,
                           &csv.s, &final_ratio, &predicted, &regime));
  emit(out_path, csv.get());
  if (!out_path.empty() || kind == 1) {
    if (kind == 1) std::printf("regime: %s\n", kind_word(regime));
    if (!out_path.empty())
      std::printf("final ratio = %s, predicted = %s\n",
                  fmt(final_ratio).c_str(), fmt(predicted).c_str());
  }
}

void run_plot(const std::string& x_path, const std::string& y_path,
              const std::string& out_path, std::string format) {
  DistPtr x = load_dist(x_path);
  DistPtr y;
  if (!y_path.empty()) y = load_dist(y_path);
  if (format.empty()) {
    format = "svg";
    if (out_path.size() >= 4 &&
        out_path.compare(out_path.size() - 4, 4, ".csv") == 0)
      format = "csv";
  }
  if (format == "svg") {
    OwnedString svg;
    check(nuk_plot_svg(x.get(), y.get(), &svg.s));
    emit(out_path, svg.get());
  } else if (format == "csv") {
    if (y) die(64, "csv format exports a single curve; drop --y");
    OwnedString csv;
    check(nuk_curve_csv(x.get(), g_precision, &csv.s));
    emit(out_path, csv.get());
  } else {
    die(64, "unknown format '" + format + "' (svg or csv)");
  }
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* env = std::getenv("NUK_PRECISION")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= 17)
      g_precision = static_cast<int>(v);
  }

  CLI::App app{"Computations in the resource theory of nonuniformity"};
  app.require_subcommand(1);

  std::string x_path, y_path, z_path, out_path, p_list, metric = "trace";
  std::string format;
  double eps = 0.0;
  int n_max = 10;
  bool strict = false, strong = false;

  CLI::App* c_mono = app.add_subcommand(
      "monotones", "Evaluate the nonuniformity monotone table");
  c_mono->add_option("--x", x_path, "state file")->required();
  c_mono->add_option("--p", p_list,
                     "comma-separated orders (e.g. 0,1,2,inf,-inf)");
  c_mono->add_option("--out", out_path, "write CSV here instead of a table");

  CLI::App* c_decide =
      app.add_subcommand("decide", "Exact go/no-go conversion decision");
  c_decide->add_option("--x", x_path, "source state file")->required();
  c_decide->add_option("--y", y_path, "target state file")->required();
  c_decide->add_flag("--strict", strict, "exit 2 on NO-GO");

  CLI::App* c_witness = app.add_subcommand(
      "witness", "Signed conversion rate with exact 2^lambda");
  c_witness->add_option("--x", x_path, "source state file")->required();
  c_witness->add_option("--y", y_path, "target state file")->required();

  CLI::App* c_proto = app.add_subcommand(
      "protocol", "Synthesize an executable T-transform protocol");
  c_proto->add_option("--x", x_path, "source state file")->required();
  c_proto->add_option("--y", y_path, "target state file")->required();
  c_proto->add_option("--out", out_path, "protocol file destination");
  c_proto->add_flag("--strict", strict, "exit 2 when infeasible");

  CLI::App* c_trump =
      app.add_subcommand("trump", "Catalytic convertibility report");
  c_trump->add_option("--x", x_path, "source state file")->required();
  c_trump->add_option("--y", y_path, "target state file")->required();
  c_trump->add_option("--z", z_path, "candidate catalyst to verify");
  c_trump->add_flag("--strong", strong,
                    "require all real orders, not just p >= 0");

  CLI::App* c_smooth =
      app.add_subcommand("smooth", "Smoothed entropies at radius eps");
  c_smooth->add_option("--x", x_path, "state file")->required();
  c_smooth->add_option("--eps", eps, "smoothing radius in [0,1)")->required();
  c_smooth->add_option("--metric", metric, "trace (default) or purified");

  CLI::App* c_distill =
      app.add_subcommand("distill", "Sharp-state yield, exact or smoothed");
  c_distill->add_option("--x", x_path, "state file")->required();
  CLI::Option* distill_eps =
      c_distill->add_option("--eps", eps, "smoothing radius");

  CLI::App* c_form =
      app.add_subcommand("form", "Sharp-state cost, exact or smoothed");
  c_form->add_option("--x", x_path, "state file")->required();
  CLI::Option* form_eps = c_form->add_option("--eps", eps, "smoothing radius");

  CLI::App* c_rate = app.add_subcommand(
      "rate", "n-copy conversion rate experiment (certified-achievable)");
  c_rate->add_option("--x", x_path, "source state file")->required();
  c_rate->add_option("--y", y_path, "target state file")->required();
  c_rate->add_option("--eps", eps, "total error budget")->required();
  c_rate->add_option("--nmax", n_max, "largest copy count")->required();
  c_rate->add_option("--out", out_path, "CSV destination");

  CLI::App* c_cost = app.add_subcommand(
      "cost", "n-copy sharp-bit supplement experiment (cost or yield)");
  c_cost->add_option("--x", x_path, "source state file")->required();
  c_cost->add_option("--y", y_path, "target state file")->required();
  c_cost->add_option("--eps", eps, "total error budget")->required();
  c_cost->add_option("--nmax", n_max, "largest copy count")->required();
  c_cost->add_option("--out", out_path, "CSV destination");

  CLI::App* c_plot =
      app.add_subcommand("plot", "Lorenz curve plot (SVG) or table (CSV)");
  c_plot->add_option("--x", x_path, "state file")->required();
  c_plot->add_option("--y", y_path, "second state file");
  c_plot->add_option("--out", out_path, "output file");
  c_plot->add_option("--format", format, "svg or csv (default from --out)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 64;
  }

  if (c_mono->parsed()) {
    run_monotones(x_path, p_list, out_path);
  } else if (c_decide->parsed()) {
    return run_decide(x_path, y_path, strict);
  } else if (c_witness->parsed()) {
    run_witness(x_path, y_path);
  } else if (c_proto->parsed()) {
    return run_protocol(x_path, y_path, out_path, strict);
  } else if (c_trump->parsed()) {
    run_trump(x_path, y_path, z_path, strong);
  } else if (c_smooth->parsed()) {
    run_smooth(x_path, eps, metric);
  } else if (c_distill->parsed()) {
    run_distill(x_path, eps, distill_eps->count() > 0);
  } else if (c_form->parsed()) {
    run_form(x_path, eps, form_eps->count() > 0);
  } else if (c_rate->parsed()) {
    run_experiment(0, x_path, y_path, eps, n_max, out_path);
  } else if (c_cost->parsed()) {
    run_experiment(1, x_path, y_path, eps, n_max, out_path);
  } else if (c_plot->parsed()) {
    run_plot(x_path, y_path, out_path, format);
  }
  return 0;
}
