#ifndef ISING_TEST_UTIL_HPP
#define ISING_TEST_UTIL_HPP

#include "ising/series.hpp"

#include <random>

namespace testutil {

inline ising::Rational rand_rat(std::mt19937& g, int span = 9, int den = 7) {
  std::uniform_int_distribution<int> num(-span, span), d(1, den);
  ising::Rational r(num(g), d(g));
  r.canonicalize();
  return r;
}

// random k-series with the given valuation, exact to `order`
inline ising::SeriesK rand_series(std::mt19937& g, int valuation, int order, bool unit = false) {
  std::vector<ising::Rational> c;
  for (int p = valuation; p <= order; ++p) c.push_back(rand_rat(g));
  if (unit && c[0] == 0) c[0] = 1;
  return ising::SeriesK::from_coeffs(valuation, c, order);
}

}  // namespace testutil

#endif
