#ifndef ISING_BOUNDARY_HPP
#define ISING_BOUNDARY_HPP

#include "ising/painleve.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ising {

enum class Branch { B1 = 1, B2 = 2, B3 = 3, B4 = 4 };
std::string to_string(Branch b);
Branch parse_branch(const std::string& s);

class BoundaryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct BranchSeed {
  Rational c0;
  std::optional<Rational> c1, c2, c3;  // empty where the closed form has a vanishing denominator
};

// closed-form c0..c3 of the four analytic-at-0 solutions
BranchSeed branch_seed(const OkamotoN& n, Branch b);

// branch combination D with c_{k+1} denominators D +- k; resonance where |D| = k
Rational branch_denominator(const OkamotoN& n, Branch b);

// constant-term relation and the bracket multiplying c2 in the t-term
Rational f0_value(const OkamotoN& n, const Rational& c0, const Rational& c1);
Rational f1_bracket(const OkamotoN& n, const Rational& c0, const Rational& c1);

struct Resonance {
  int order = 0;
  Rational value;
};

struct BranchSolution {
  Branch branch = Branch::B1;
  OkamotoN n{};
  std::vector<Rational> coeffs;  // c_0 .. c_order
  std::vector<Resonance> resonances;
  std::vector<Rational> pivots;  // a_k of a_k c_k = b_k, k >= 2 (index k-2)
  int order = 0;
  SeriesK series() const;  // h as a t-series exact to t^order
};

// h = sum c_k t^k through t^order; free constants come from the schedule at resonances
BranchSolution solve_analytic(const OkamotoN& n, Branch b, const std::map<int, Rational>& freeSchedule,
                              int order);

struct LambdaMatch {
  int resonance_order = 0;
  Rational free_constant;        // c_r of the correlation's h
  Rational free_constant_zero;   // c_r of the lambda = 0 member
  Rational bracket_coefficient;  // coefficient of t^r inside the normalized bracket
  SeriesK lambda_zero;           // the lambda = 0 member, exact to the order used
};

// matches a correlation's h against the branch; throws on a mismatch below the resonance
LambdaMatch match_lambda(const Correlation& c, const BranchSolution& sol);

// lambda = 0 member: (1-t)^{1/4} (LowT), (1-t)^{1/4} t^{N/2} K1 F(..) (HighT even),
// (1-t)^{-1/4} t^{N/2} K1 F(..) (HighT tilde); K1 is the leading coefficient of c
SeriesK lambda_zero_member(const Correlation& c);

// the branch the boundary analysis assigns to a correlation
Branch natural_branch(const Correlation& c);

}  // namespace ising

#endif
