#ifndef ISING_PAINLEVE_HPP
#define ISING_PAINLEVE_HPP

#include "ising/correlation.hpp"
#include "ising/series.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace ising {

enum class SigmaVariant { DiagLow, DiagHigh, Low, HighEven, HighOdd };
std::string to_string(SigmaVariant v);

struct SigmaSeries {
  SeriesK series;  // in t
  SigmaVariant variant = SigmaVariant::Low;
  int M = 0;
  int N = 0;
};

// variant picked from the correlation: M == N gives the diagonal variants
SigmaSeries sigma_from_corr(const Correlation& c);
SigmaSeries sigma_from_corr(const Correlation& c, SigmaVariant v);
// sigma = t(t-1) dlog C/dt - shift_t * t - shift_c
SeriesK tdlog_shifted(const SeriesK& c, const Rational& shift_t, const Rational& shift_c);

enum class OdeFamily { JMDiag, LowMN, HighEvenMN, HighOddMN };
std::string to_string(OdeFamily f);

struct OdeSpec {
  OdeFamily family = OdeFamily::LowMN;
  int M = 0;
  int N = 0;
};

// the family matching a sigma variant
OdeSpec ode_for(const SigmaSeries& s);

struct CosgroveParams {
  Rational c5, c6, c7, c8, c9, c10;
  std::array<Rational, 6> as_array() const { return {c5, c6, c7, c8, c9, c10}; }
  static CosgroveParams from_array(const std::array<Rational, 6>& a) {
    return {a[0], a[1], a[2], a[3], a[4], a[5]};
  }
  friend bool operator==(const CosgroveParams& a, const CosgroveParams& b) {
    return a.as_array() == b.as_array();
  }
};

// c-parameters read off from the family's equation
CosgroveParams cosgrove_params_for(const OdeSpec& spec);

// left minus right of the family's equation; throws if sigma has fewer than
// two known t-orders
SeriesK ode_residual(const SigmaSeries& s, const OdeSpec& spec);
SeriesK ode_residual(const SeriesK& sigma, const OdeSpec& spec);
// (x(x-1)y'')^2 + 4{y'(xy'-y)^2 - y'^2(xy'-y) + c5 X^2 + c6 y'X + c7 y'^2 + c8 X + c9 y' + c10}
SeriesK cosgrove_residual(const SeriesK& y, const CosgroveParams& p);

// highest t-power through which a residual is known, and whether it vanishes there
struct ResidualCheck {
  bool vanishes = false;
  int order_verified = -1;      // t-order through which the residual is known to be zero
  int first_nonzero = -1;       // t-power of the leading nonzero coefficient, -1 if none
  std::string leading_term;     // "c*t^p" when nonzero
};
ResidualCheck check_residual(const SeriesK& r);

using OkamotoN = std::array<Rational, 4>;
std::string to_string(const OkamotoN& n);

// h'(t(t-1)h'')^2 + (h'(2h-(2t-1)h') + n1n2n3n4)^2 - prod(h' + n_i^2)
SeriesK okamoto_residual(const SeriesK& h, const OkamotoN& n);

struct OkamotoForm {
  OkamotoN n{};
  Rational shiftA, shiftB;  // h = sigma + A t + B
  SeriesK hSeries;
};

// same class under permutations and even sign changes
bool okamoto_equivalent(const OkamotoN& a, const OkamotoN& b);
// |n_i| sorted descending; the last entry negated when the product is negative
OkamotoN okamoto_canonical(const OkamotoN& n);

// Okamoto parameters of the three (M,N) families
OkamotoN okamoto_low(int M, int N);
OkamotoN okamoto_high_even(int M, int N);
OkamotoN okamoto_high_odd(int M, int N);

struct HData {
  SeriesK h;
  OkamotoN n{};
  Rational shift_t, shift_c;  // h = t(t-1) dlog C/dt - shift_t t - shift_c
};
// LowT any parity, HighT even, HighT odd on the tilde correlation; M <= N
HData h_from_corr(const Correlation& c);
// factor f_i (i = 1..4) of the odd-N row correlation, N odd
HData h_from_factor(const SeriesK& f, int i, int N);

// h from the FW determinant through tau_N = (1-t)^{-MN/2} D_N
struct FwBridge {
  OkamotoN n{};
  Rational p, pp;
  SeriesK h;
};
FwBridge h_from_fw(int M, int N, Regime regime, int order);

struct KwReport {
  int M = 0, N = 0, order = 0;
  bool invol_applicable = false;
  ResidualCheck invol;
  int dual_points = 0;
  bool dual_consistent = false;
  std::optional<int> dual_exponent;
  std::vector<std::string> notes;
  bool ok() const;
};
// polynomial of a family at a point (t, s, s', s'')
Rational ode_poly_at(const OdeSpec& spec, const Rational& t, const Rational& s, const Rational& s1,
                     const Rational& s2);
// invol check on LowT sigma (M+N even) and dual check on each family
KwReport kw_checks(int M, int N, int order, unsigned seed = 20240611u, int points = 20);
// dual proportionality on one family polynomial against its M <-> N swap
struct DualCheck {
  int points = 0;
  bool consistent = false;
  std::optional<int> exponent;
};
DualCheck dual_check(const OdeSpec& spec, unsigned seed, int points);

}  // namespace ising

#endif
