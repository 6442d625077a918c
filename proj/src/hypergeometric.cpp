#include "ising/hypergeometric.hpp"

namespace ising {

Hyp2F1Spec::Hyp2F1Spec(Rational a_, Rational b_, Rational c_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {
  if (is_integer(c) && c <= 0) throw SeriesError("2F1: lower parameter is a non-positive integer");
}

std::vector<Rational> hyp2f1_coeffs(const Hyp2F1Spec& s, int nmax) {
  std::vector<Rational> out;
  if (nmax < 0) return out;
  out.reserve(static_cast<size_t>(nmax + 1));
  Rational term = 1;
  out.push_back(term);
  for (int n = 0; n < nmax; ++n) {
    term *= (s.a + n) * (s.b + n) / ((s.c + n) * Rational(n + 1));
    out.push_back(term);
  }
  return out;
}

SeriesK hyp2f1_series(const Hyp2F1Spec& spec, int torder) {
  if (torder < 0) throw SeriesError("2F1: negative order");
  return SeriesK::from_t_coeffs(0, hyp2f1_coeffs(spec, torder), torder);
}

SeriesK hyp2f1_k(const Rational& a, const Rational& b, const Rational& c, int korder) {
  if (korder < 0) return SeriesK::zero(korder);
  return hyp2f1_series(Hyp2F1Spec(a, b, c), korder / 2).as_k().truncate(korder);
}

SeriesK elliptic_series(Elliptic which, int korder) {
  Rational h(1, 2);
  return which == Elliptic::K ? hyp2f1_k(h, h, 1, korder) : hyp2f1_k(h, -h, 1, korder);
}

SeriesK elliptic_pi_series(const SeriesK& x, int korder) {
  // moments (2/pi) int sin^{2n} = (1/2)_n / n!
  int nmax = korder / 2 + 1;
  std::vector<Rational> mom(static_cast<size_t>(nmax + 1));
  for (int n = 0; n <= nmax; ++n) mom[static_cast<size_t>(n)] = pochhammer(Rational(1, 2), n) / factorial(n);
  SeriesK xs = x.as_k();
  int vx = xs.is_zero() ? korder + 1 : xs.valuation();
  if (vx < 1) throw SeriesError("elliptic_pi_series: x must vanish at k=0");
  SeriesK total = SeriesK::zero(korder);
  SeriesK xa = SeriesK::constant(1, korder);
  for (int a = 0; a * vx <= korder; ++a) {
    std::vector<Rational> inner(static_cast<size_t>(korder + 1));
    for (int b = 0; 2 * b <= korder; ++b) {
      if (a + b > nmax) break;
      inner[static_cast<size_t>(2 * b)] = mom[static_cast<size_t>(b)] * mom[static_cast<size_t>(a + b)];
    }
    total += xa * SeriesK::from_coeffs(0, std::move(inner), korder);
    xa = xa * xs;
  }
  return total.truncate(std::min(korder, xs.order()));
}

SeriesK one_minus_t(int korder) {
  return SeriesK::constant(1, korder) - SeriesK::monomial(1, 2, korder);
}

SeriesK one_minus_t_pow(const Rational& e, int korder) {
  return series_pow_rational(one_minus_t(korder), e);
}

}  // namespace ising
