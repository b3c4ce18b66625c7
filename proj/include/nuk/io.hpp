#pragma once

#include <optional>
#include <string>

#include "nuk/conversion.hpp"
#include "nuk/distribution.hpp"
#include "nuk/lorenz.hpp"
#include "nuk/smoothing.hpp"

namespace nuk {

// Distribution text format: components separated by commas and/or
// whitespace, each a rational ("1/3"), integer, or decimal ("0.25",
// "2.5e-3").  '#' starts a comment running to end of line.  Parse errors
// carry line/column diagnostics.
Distribution parse_distribution(const std::string& text);
Distribution load_distribution(const std::string& path);
std::string format_distribution(const Distribution& x);

// Lorenz curve breakpoints as CSV, header "u,v", exact rationals
// rendered as decimals with full precision of the float print mode.
std::string curve_csv(const LorenzCurve& c, int sig_digits);

// Protocol file format:
//   line 1: d_common,ancilla_in,ancilla_out
//   line 2: pre-permutation in cycle notation, 1-based, "(1 3 2)(4 5)";
//           "()" for the identity
//   lines 3+: one step per line, "i,j,w" with w an exact rational
// Comments and blank lines allowed as in the distribution format.
std::string format_protocol(const Protocol& pr);
Protocol parse_protocol(const std::string& text);
Protocol load_protocol(const std::string& path);

// Rate/cost experiment rows as CSV, header "n,m_n,ratio,predicted".
std::string experiment_csv(const RateExperiment& e, int sig_digits);

// Lorenz curve plot on the unit square: diagonal reference line, one
// or two curves, elbow markers.
std::string curves_svg(const Distribution& x, const Distribution* y_opt);

// Floats rendered with the given significant digits, '.' separator,
// no locale dependence.
std::string format_float(double v, int sig_digits);

}  // namespace nuk
