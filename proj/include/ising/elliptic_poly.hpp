#ifndef ISING_ELLIPTIC_POLY_HPP
#define ISING_ELLIPTIC_POLY_HPP

#include "ising/correlation.hpp"

#include <string>
#include <vector>

namespace ising {

// polynomial in t, ascending coefficients
using TPoly = std::vector<Rational>;

struct RatFuncT {
  TPoly num{Rational(1)};
  TPoly den{Rational(1)};
};

struct EllipticTerm {
  RatFuncT coeff;
  int e_exp = 0;  // power of E~
  int k_exp = 0;  // power of K~
};

// constant * t^t_pow * (1-t)^omt_pow * sum coeff(t) E~^a K~^b
struct EllipticPoly {
  std::vector<EllipticTerm> terms;
  Rational t_pow = 0;
  Rational omt_pow = 0;
  Rational constant = 1;
  // true if every term has the same total degree a+b
  bool homogeneous() const;
};

EllipticPoly elliptic_poly_product(const EllipticPoly& a, const EllipticPoly& b);

// exact k-series through k^order; throws if a pole at t = 0 survives the prefactor
SeriesK elliptic_poly_eval(const EllipticPoly& p, int order);

struct Fixture {
  std::string name;
  Regime regime = Regime::LowT;
  int M = 0;
  int N = 0;
  bool tilde = false;
  EllipticPoly poly;
  std::string path;
};

// Text format, one fixture per file:
//   name  <id>
//   corr  low|high M N [tilde]
//   prefactor <const> <t-power> <(1-t)-power>
//   factor <term> ; <term> ; ...     (one sum; factors multiply)
// where <term> is  (c0,c1,...)[/(d0,d1,...)] E^a K^b , coefficients ascending in t.
Fixture parse_fixture(const std::string& text, const std::string& origin = "<string>");
Fixture load_fixture(const std::string& path);
std::vector<Fixture> load_fixture_dir(const std::string& dir);

// the four factors f1..f4 of the low-T C(0,5), in that order, and their product with
// the constant and the powers of t and (1-t)
std::vector<EllipticPoly> c05_factors();
EllipticPoly c05_product();
std::string default_fixture_dir();

}  // namespace ising

#endif
