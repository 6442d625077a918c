#ifndef ISING_HYPERGEOMETRIC_HPP
#define ISING_HYPERGEOMETRIC_HPP

#include "ising/series.hpp"

namespace ising {

struct Hyp2F1Spec {
  Rational a, b, c;
  Hyp2F1Spec(Rational a_, Rational b_, Rational c_);
};

// 2F1([a,b],[c],t) through t^torder, tagged as a t-series
SeriesK hyp2f1_series(const Hyp2F1Spec& spec, int torder);
// same function of t = k^2 with its order counted in k
SeriesK hyp2f1_k(const Rational& a, const Rational& b, const Rational& c, int korder);
// raw coefficient list (a)_n (b)_n / ((c)_n n!), n = 0..nmax
std::vector<Rational> hyp2f1_coeffs(const Hyp2F1Spec& spec, int nmax);

enum class Elliptic { K, E };
// normalized complete elliptic integrals as even k-series
SeriesK elliptic_series(Elliptic which, int korder);

// (2/pi) int_0^{pi/2} dtheta / ((1 - x sin^2)(1 - k^2 sin^2)^{1/2}), summed directly
// from the sine-power moments; x must be a k-series with valuation >= 1
SeriesK elliptic_pi_series(const SeriesK& x, int korder);

// common k-series building blocks
SeriesK one_minus_t(int korder);
// (1 - t)^e
SeriesK one_minus_t_pow(const Rational& e, int korder);

}  // namespace ising

#endif
