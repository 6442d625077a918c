#ifndef ISING_COSGROVE_HPP
#define ISING_COSGROVE_HPP

#include "ising/painleve.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ising {

struct CosgroveFit {
  std::optional<CosgroveParams> params;  // set when the system is consistent
  int unknowns = 6;
  int equations = 0;       // t^0 .. t^budget
  int rank = 0;
  int solution_dim = 0;    // 6 - rank when consistent
  int surplus = 0;         // equations satisfied beyond those fixing the solution
  bool consistent = false;
  std::string diagnostic;
  bool unique() const { return consistent && solution_dim == 0; }
};

// fits c5..c10 from the t^0..t^budget coefficients of the Cosgrove residual;
// budget is clamped to the orders the series actually determines
CosgroveFit cosgrove_fit(const SeriesK& y, int budget);

// exact solve of A x = b; returns the rank and a particular solution (free variables 0)
struct LinearSolve {
  int rank = 0;
  bool consistent = false;
  std::vector<Rational> x;
};
LinearSolve solve_linear(std::vector<std::vector<Rational>> A, std::vector<Rational> b);

// rational roots of a polynomial given by ascending coefficients, with multiplicity;
// nullopt if some root is not rational
std::optional<std::vector<Rational>> rational_roots(std::vector<Rational> coeffs);

struct OkamotoReduction {
  Rational A, B;  // h = y - A t - B
  CosgroveParams tilde;
  Rational e1, e2, e3, e4;
  std::vector<OkamotoForm> candidates;  // canonical representatives
  std::string diagnostic;
  bool ok() const { return !candidates.empty(); }
};

OkamotoReduction cosgrove_to_okamoto(const CosgroveParams& p);
// also fills hSeries from y
OkamotoReduction cosgrove_to_okamoto(const CosgroveParams& p, const SeriesK& y);

}  // namespace ising

#endif
