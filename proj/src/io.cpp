#include "nuk/io.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "nuk/error.hpp"

namespace nuk {

namespace {

struct Token {
  std::string text;
  int line = 0;
  int col = 0;
};

bool is_value_char(char c) {
  return std::isdigit(static_cast<unsigned char>(c)) || c == '.' ||
         c == '/' || c == '+' || c == '-' || c == 'e' || c == 'E';
}

// Splits on whitespace and commas; '#' comments run to end of line.
std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      ++col;
      ++i;
      continue;
    }
    if (!is_value_char(c))
      fail(Err::parse, "line " + std::to_string(line) + ", column " +
                           std::to_string(col) + ": unexpected character '" +
                           std::string(1, c) + "'");
    Token t;
    t.line = line;
    t.col = col;
    while (i < text.size() && is_value_char(text[i])) {
      t.text.push_back(text[i]);
      ++i;
      ++col;
    }
    out.push_back(std::move(t));
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Err::parse, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Rat token_rat(const Token& t) {
  try {
    return rat_from_string(t.text);
  } catch (const Error& e) {
    fail(Err::parse, "line " + std::to_string(t.line) + ", column " +
                         std::to_string(t.col) + ": bad value '" + t.text +
                         "' (" + e.what() + ")");
  }
}

long long token_int(const Token& t) {
  Rat r = token_rat(t);
  if (r.get_den() != 1)
    fail(Err::parse, "line " + std::to_string(t.line) + ", column " +
                         std::to_string(t.col) + ": expected an integer, got '" +
                         t.text + "'");
  if (!r.get_num().fits_slong_p())
    fail(Err::parse, "line " + std::to_string(t.line) + ", column " +
                         std::to_string(t.col) + ": integer out of range");
  return r.get_num().get_si();
}

// Logical lines with comments stripped, keeping 1-based line numbers.
std::vector<std::pair<int, std::string>> content_lines(
    const std::string& text) {
  std::vector<std::pair<int, std::string>> out;
  std::istringstream in(text);
  std::string raw;
  int ln = 0;
  while (std::getline(in, raw)) {
    ++ln;
    size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    size_t a = raw.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    size_t b = raw.find_last_not_of(" \t\r");
    out.emplace_back(ln, raw.substr(a, b - a + 1));
  }
  return out;
}

}  // namespace

Distribution parse_distribution(const std::string& text) {
  std::vector<Token> toks = tokenize(text);
  if (toks.empty()) fail(Err::parse, "no components found");
  std::vector<Rat> comps;
  comps.reserve(toks.size());
  for (const Token& t : toks) comps.push_back(token_rat(t));
  return make_distribution(comps);
}

Distribution load_distribution(const std::string& path) {
  return parse_distribution(read_file(path));
}

std::string format_distribution(const Distribution& x) {
  std::string out;
  for (int i = 0; i < x.dim(); ++i) {
    if (i) out += ", ";
    out += rat_to_string(x.p[i]);
  }
  out += "\n";
  return out;
}

std::string format_float(double v, int sig_digits) {
  if (sig_digits < 1) sig_digits = 1;
  if (sig_digits > 17) sig_digits = 17;
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", sig_digits, v);
  return buf;
}

std::string curve_csv(const LorenzCurve& c, int sig_digits) {
  std::string out = "u,v,u_exact,v_exact\n";
  for (long long k = 0; k <= c.d; ++k) {
    Rat u = frac(k, static_cast<long long>(c.d));
    const Rat& v = c.S[static_cast<size_t>(k)];
    out += format_float(rat_to_double(u), sig_digits);
    out += ",";
    out += format_float(rat_to_double(v), sig_digits);
    out += ",";
    out += rat_to_string(u);
    out += ",";
    out += rat_to_string(v);
    out += "\n";
  }
  return out;
}

std::string format_protocol(const Protocol& pr) {
  std::string out = std::to_string(pr.d_common) + "," +
                    std::to_string(pr.ancilla_in) + "," +
                    std::to_string(pr.ancilla_out) + "\n";
  // cycle notation for the relabeling, fixed points omitted
  std::string cycles;
  std::vector<bool> seen(pr.pre_permutation.size(), false);
  for (size_t s = 0; s < pr.pre_permutation.size(); ++s) {
    if (seen[s] || pr.pre_permutation[s] == static_cast<int>(s)) continue;
    cycles += "(";
    size_t cur = s;
    bool first = true;
    while (!seen[cur]) {
      seen[cur] = true;
      if (!first) cycles += " ";
      cycles += std::to_string(cur + 1);
      first = false;
      cur = static_cast<size_t>(pr.pre_permutation[cur]);
    }
    cycles += ")";
  }
  if (cycles.empty()) cycles = "()";
  out += cycles + "\n";
  for (const TTransform& st : pr.steps)
    out += std::to_string(st.i) + "," + std::to_string(st.j) + "," +
           rat_to_string(st.w) + "\n";
  return out;
}

Protocol parse_protocol(const std::string& text) {
  auto lines = content_lines(text);
  if (lines.size() < 2)
    fail(Err::parse, "protocol needs a header line and a permutation line");

  Protocol pr;
  {
    std::vector<Token> hdr = tokenize(lines[0].second);
    for (Token& t : hdr) t.line = lines[0].first;
    if (hdr.size() != 3)
      fail(Err::parse, "line " + std::to_string(lines[0].first) +
                           ": header must be d_common,ancilla_in,ancilla_out");
    pr.d_common = token_int(hdr[0]);
    pr.ancilla_in = token_int(hdr[1]);
    pr.ancilla_out = token_int(hdr[2]);
    if (pr.d_common < 1 || pr.ancilla_in < 1 || pr.ancilla_out < 1)
      fail(Err::parse, "line " + std::to_string(lines[0].first) +
                           ": dimensions must be positive");
  }

  // permutation in cycle notation, 1-based slots
  {
    const std::string& s = lines[1].second;
    int ln = lines[1].first;
    pr.pre_permutation.resize(static_cast<size_t>(pr.d_common));
    for (size_t k = 0; k < pr.pre_permutation.size(); ++k)
      pr.pre_permutation[k] = static_cast<int>(k);
    std::vector<bool> used(pr.pre_permutation.size(), false);
    size_t i = 0;
    bool any = false;
    while (i < s.size()) {
      char c = s[i];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
        continue;
      }
      if (c != '(')
        fail(Err::parse, "line " + std::to_string(ln) + ", column " +
                             std::to_string(i + 1) + ": expected '('");
      ++i;
      std::vector<long long> cyc;
      while (i < s.size() && s[i] != ')') {
        if (std::isspace(static_cast<unsigned char>(s[i]))) {
          ++i;
          continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
          fail(Err::parse, "line " + std::to_string(ln) + ", column " +
                               std::to_string(i + 1) +
                               ": expected a slot number");
        long long v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
          v = v * 10 + (s[i++] - '0');
        if (v < 1 || v > pr.d_common)
          fail(Err::parse, "line " + std::to_string(ln) + ": slot " +
                               std::to_string(v) + " outside 1.." +
                               std::to_string(pr.d_common));
        if (used[static_cast<size_t>(v - 1)])
          fail(Err::parse, "line " + std::to_string(ln) + ": slot " +
                               std::to_string(v) + " repeated");
        used[static_cast<size_t>(v - 1)] = true;
        cyc.push_back(v);
      }
      if (i >= s.size())
        fail(Err::parse, "line " + std::to_string(ln) + ": unclosed cycle");
      ++i;  // ')'
      any = true;
      for (size_t k = 0; k < cyc.size(); ++k) {
        size_t from = static_cast<size_t>(cyc[k] - 1);
        size_t to = static_cast<size_t>(cyc[(k + 1) % cyc.size()] - 1);
        pr.pre_permutation[from] = static_cast<int>(to);
      }
    }
    if (!any)
      fail(Err::parse,
           "line " + std::to_string(ln) + ": expected cycles or \"()\"");
  }

  for (size_t li = 2; li < lines.size(); ++li) {
    std::vector<Token> st = tokenize(lines[li].second);
    for (Token& t : st) t.line = lines[li].first;
    if (st.size() != 3)
      fail(Err::parse, "line " + std::to_string(lines[li].first) +
                           ": step must be i,j,w");
    TTransform tt;
    long long i = token_int(st[0]), j = token_int(st[1]);
    if (i < 1 || i > pr.d_common || j < 1 || j > pr.d_common || i == j)
      fail(Err::parse, "line " + std::to_string(lines[li].first) +
                           ": step indices must be distinct slots in 1.." +
                           std::to_string(pr.d_common));
    tt.i = static_cast<int>(i);
    tt.j = static_cast<int>(j);
    tt.w = token_rat(st[2]);
    if (tt.w < frac(1LL, 2LL) || tt.w > 1)
      fail(Err::parse, "line " + std::to_string(lines[li].first) +
                           ": step weight must lie in [1/2, 1]");
    pr.steps.push_back(std::move(tt));
  }
  return pr;
}

Protocol load_protocol(const std::string& path) {
  return parse_protocol(read_file(path));
}

std::string experiment_csv(const RateExperiment& e, int sig_digits) {
  std::string out = "n,m_n,ratio,predicted\n";
  for (const RateRow& r : e.rows) {
    out += std::to_string(r.n);
    out += ",";
    out += std::to_string(r.m);
    out += ",";
    out += format_float(r.ratio, sig_digits);
    out += ",";
    out += format_float(e.predicted_rate, sig_digits);
    out += "\n";
  }
  return out;
}

namespace {

constexpr double kPlotSize = 480.0;
constexpr double kMargin = 40.0;

double px(double u) { return kMargin + u * kPlotSize; }
double py(double v) { return kMargin + (1.0 - v) * kPlotSize; }

std::string coord(double v) { return format_float(v, 6); }

void append_curve(std::string& svg, const Distribution& x,
                  const char* color) {
  LorenzCurve c = build_curve(sort_descending(x));
  std::string pts;
  for (long long k = 0; k <= c.d; ++k) {
    if (k) pts += " ";
    pts += coord(px(static_cast<double>(k) / static_cast<double>(c.d)));
    pts += ",";
    pts += coord(py(rat_to_double(c.S[static_cast<size_t>(k)])));
  }
  svg += "  <polyline fill=\"none\" stroke=\"";
  svg += color;
  svg += "\" stroke-width=\"2\" points=\"" + pts + "\"/>\n";
  for (long long k = 0; k <= c.d; ++k) {
    svg += "  <circle cx=\"" +
           coord(px(static_cast<double>(k) / static_cast<double>(c.d))) +
           "\" cy=\"" + coord(py(rat_to_double(c.S[static_cast<size_t>(k)]))) +
           "\" r=\"3\" fill=\"";
    svg += color;
    svg += "\"/>\n";
  }
}

}  // namespace

std::string curves_svg(const Distribution& x, const Distribution* y_opt) {
  double size = kPlotSize + 2 * kMargin;
  std::string svg =
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + coord(size) +
      "\" height=\"" + coord(size) + "\" viewBox=\"0 0 " + coord(size) + " " +
      coord(size) + "\">\n";
  svg += "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg += "  <rect x=\"" + coord(kMargin) + "\" y=\"" + coord(kMargin) +
         "\" width=\"" + coord(kPlotSize) + "\" height=\"" + coord(kPlotSize) +
         "\" fill=\"none\" stroke=\"#333333\"/>\n";
  // uniform-state reference: the diagonal of the unit square
  svg += "  <line x1=\"" + coord(px(0)) + "\" y1=\"" + coord(py(0)) +
         "\" x2=\"" + coord(px(1)) + "\" y2=\"" + coord(py(1)) +
         "\" stroke=\"#999999\" stroke-dasharray=\"6 4\"/>\n";
  append_curve(svg, x, "#1f6fb4");
  svg += "  <text x=\"" + coord(kMargin + 8) + "\" y=\"" + coord(kMargin + 18) +
         "\" font-family=\"sans-serif\" font-size=\"13\" fill=\"#1f6fb4\">"
         "x</text>\n";
  if (y_opt) {
    append_curve(svg, *y_opt, "#c23b3b");
    svg += "  <text x=\"" + coord(kMargin + 8) + "\" y=\"" +
           coord(kMargin + 36) +
           "\" font-family=\"sans-serif\" font-size=\"13\" fill=\"#c23b3b\">"
           "y</text>\n";
  }
  svg += "  <text x=\"" + coord(kMargin + kPlotSize / 2) + "\" y=\"" +
         coord(size - 10) +
         "\" font-family=\"sans-serif\" font-size=\"13\" fill=\"#333333\" "
         "text-anchor=\"middle\">u</text>\n";
  svg += "  <text x=\"" + coord(12.0) + "\" y=\"" +
         coord(kMargin + kPlotSize / 2) +
         "\" font-family=\"sans-serif\" font-size=\"13\" fill=\"#333333\" "
         "text-anchor=\"middle\" transform=\"rotate(-90 12 " +
         coord(kMargin + kPlotSize / 2) + ")\">L(u)</text>\n";
  svg += "</svg>\n";
  return svg;
}

}  // namespace nuk
