#ifndef ISING_RECURSION_HPP
#define ISING_RECURSION_HPP

#include "ising/correlation.hpp"

#include <string>
#include <vector>

namespace ising {

// a + i b with both parts exact k-series; the high-T table has purely
// imaginary entries below the diagonal at odd M+N
struct ComplexSeries {
  SeriesK re;
  SeriesK im;
  static ComplexSeries real(SeriesK s);
  static ComplexSeries imag(SeriesK s);
  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  int order() const;
  ComplexSeries truncate(int order) const;
  std::string to_string() const;
};

ComplexSeries operator+(const ComplexSeries& a, const ComplexSeries& b);
ComplexSeries operator-(const ComplexSeries& a, const ComplexSeries& b);
ComplexSeries operator*(const ComplexSeries& a, const ComplexSeries& b);
ComplexSeries operator/(const ComplexSeries& a, const ComplexSeries& b);
ComplexSeries operator-(const ComplexSeries& a);

struct TableEntry {
  bool known = false;
  ComplexSeries value;
  std::string source;  // row, diag, seed, or the relation that fixed it
};

class CorrTable {
 public:
  CorrTable() = default;
  CorrTable(Regime r, int maxM, int maxN);
  Regime regime() const { return regime_; }
  int max_m() const { return maxM_; }
  int max_n() const { return maxN_; }
  bool in_range(int M, int N) const;
  // reflections C(-M,N) = C(M,-N) = C(M,N) are applied here
  const TableEntry& at(int M, int N) const;
  TableEntry& at(int M, int N);
  bool complete() const;

 private:
  Regime regime_ = Regime::LowT;
  int maxM_ = 0, maxN_ = 0;
  std::vector<TableEntry> cells_;
};

struct RelationResidual {
  std::string relation;  // Q1, Q2, Q3 (quadratic relations) or S10, S01 (seed relations)
  int M, N;
  ComplexSeries residual;
  bool vanishes;
};

struct RecursionResult {
  CorrTable low;
  CorrTable high;
  std::vector<RelationResidual> residuals;
  bool all_residuals_vanish() const;
};

// Fill C(M,N), 0 <= M <= maxM, 0 <= N <= maxN, for the dual pair (LowT at
// nu=-k, HighT at nu=-k_>) from row-0 and diagonal seeds.  Every entry is exact
// through k^order.
RecursionResult corr_recursion_table(int maxM, int maxN, int order);

}  // namespace ising

#endif
