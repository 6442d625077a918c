#include "ising/correlation.hpp"

#include "ising/determinant.hpp"
#include "ising/hypergeometric.hpp"
#include "ising/matrix_elements.hpp"

namespace ising {

std::string to_string(Regime r) { return r == Regime::LowT ? "low" : "high"; }

RegimeFrame RegimeFrame::of(Regime r) {
  // LowT: s_h = i, s_v = -i/k.  HighT: s_h = -i k_>, s_v = i.
  if (r == Regime::LowT) return {r, Rational(-1), 0, Rational(-1), -2, Rational(1), -1};
  return {r, Rational(-1), 2, Rational(-1), 0, Rational(1), 1};
}

SeriesK RegimeFrame::sh2(int korder) const { return SeriesK::monomial(sh2_coeff, sh2_pow, korder); }
SeriesK RegimeFrame::sv2(int korder) const { return SeriesK::monomial(sv2_coeff, sv2_pow, korder); }
SeriesK RegimeFrame::svsh(int korder) const { return SeriesK::monomial(svsh_coeff, svsh_pow, korder); }

namespace {

int parity_sign(int e) { return e % 2 == 0 ? 1 : -1; }

}  // namespace

Correlation corr_row(int N, Regime regime, int order) {
  if (N < 1) throw SeriesError("corr_row: N must be >= 1");
  Correlation c{0, N, regime, false, {}, "row"};
  if (regime == Regime::LowT) {
    c.series = toeplitz_det_to_order(N, [](int idx, int w) { return row_low_element(idx, w); }, order);
    return c;
  }
  if (N % 2 != 0) {
    c.series = SeriesK::zero(order);
    return c;
  }
  int n = N / 2;
  c.series = compute_to_order(order, [&](int w) {
    SeriesMatrix a = SeriesMatrix::toeplitz(n, [&](int idx) { return row_high_symbol(-2 * idx - 1, w); });
    SeriesMatrix b = SeriesMatrix::toeplitz(n, [&](int idx) { return row_high_symbol(-2 * idx + 1, w); });
    SeriesK p = det_series(a) * det_series(b);
    return n % 2 == 0 ? p : -p;
  });
  return c;
}

Correlation corr_diag(int N, Regime regime, int order) {
  if (N < 1) throw SeriesError("corr_diag: N must be >= 1");
  bool high = regime == Regime::HighT;
  Correlation c{N, N, regime, false, {}, "diag"};
  c.series = toeplitz_det_to_order(N, [high](int idx, int w) { return diag_element(high, idx, w); }, order);
  return c;
}

Rational fw_prefactor_exponent(int M, int N, Regime regime) {
  int d = N - M;
  bool even = (M + N) % 2 == 0;
  if (regime == Regime::LowT) return Rational(d * d + 1 - (even ? 1 : 0), 4);
  return even ? Rational(d * d, 4) : Rational(d * d - 1, 4);
}

SeriesK fw_determinant(int M, int N, Regime regime, int order) {
  if (N < 1 || M < 0 || M > N) throw SeriesError("FW determinant needs 1 <= N and 0 <= M <= N");
  if (regime == Regime::LowT)
    return toeplitz_det_to_order(N, [M, N](int idx, int w) { return fw_low_element(M, N, idx, w); }, order);
  return toeplitz_det_to_order(N, [M, N](int idx, int w) { return fw_high_element(M, N, idx, w); }, order);
}

Correlation corr_fw(int M, int N, Regime regime, int order, bool want_tilde) {
  bool even = (M + N) % 2 == 0;
  Correlation c{M, N, regime, false, {}, "fw"};
  if (regime == Regime::HighT && !even && !want_tilde) {
    c.series = SeriesK::zero(order);
    return c;
  }
  SeriesK d = fw_determinant(M, N, regime, order);
  SeriesK pre = one_minus_t_pow(fw_prefactor_exponent(M, N, regime), order);
  Rational k = 1;
  if (regime == Regime::HighT) {
    if (even) {
      k = parity_sign((N - M) / 2);
    } else {
      k = Rational(parity_sign((N - M + 1) / 2) * (M + N));
      c.tilde = true;
    }
  }
  c.series = (k * (pre * d)).truncate(order);
  return c;
}

}  // namespace ising
