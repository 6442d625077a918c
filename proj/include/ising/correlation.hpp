#ifndef ISING_CORRELATION_HPP
#define ISING_CORRELATION_HPP

#include "ising/series.hpp"

#include <string>

namespace ising {

enum class Regime { LowT, HighT };

std::string to_string(Regime r);

// Couplings at nu = -k (LowT) or nu = -k_> (HighT), with the series variable
// standing for k or k_>.  Only the combinations that enter the quadratic
// relations are kept, and they are real: s_h^2, s_v^2 and s_v s_h.
struct RegimeFrame {
  Regime which;
  Rational sh2_coeff;  // s_h^2 = sh2_coeff * k^sh2_pow
  int sh2_pow;
  Rational sv2_coeff;
  int sv2_pow;
  Rational svsh_coeff;  // s_v s_h
  int svsh_pow;
  static RegimeFrame of(Regime r);
  SeriesK sh2(int korder) const;
  SeriesK sv2(int korder) const;
  SeriesK svsh(int korder) const;
};

struct Correlation {
  int M = 0;
  int N = 0;
  Regime regime = Regime::LowT;
  bool tilde = false;
  SeriesK series;
  std::string route;
};

// C(0,N): Toeplitz of the row elements (LowT) or the product of the two
// half-size determinants (HighT; zero for odd N)
Correlation corr_row(int N, Regime regime, int order);
// C(N,N) from the diagonal elements
Correlation corr_diag(int N, Regime regime, int order);
// FW-type N x N Toeplitz determinant with the (1-t) power prefactor; HighT with
// M+N odd gives the tilde correlation unless want_tilde is false (then zero)
Correlation corr_fw(int M, int N, Regime regime, int order, bool want_tilde = true);
// D_N alone (no prefactor)
SeriesK fw_determinant(int M, int N, Regime regime, int order);

// (1-t)^e with e the exponent of the FW prefactor
Rational fw_prefactor_exponent(int M, int N, Regime regime);

}  // namespace ising

#endif
