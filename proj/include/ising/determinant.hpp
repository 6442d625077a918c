#ifndef ISING_DETERMINANT_HPP
#define ISING_DETERMINANT_HPP

#include "ising/series.hpp"

#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace ising {

class SeriesMatrix {
 public:
  SeriesMatrix() = default;
  explicit SeriesMatrix(int dim);
  // entry (j,k) = gen(j-k)
  static SeriesMatrix toeplitz(int dim, const std::function<SeriesK(int)>& gen);
  static SeriesMatrix from_rows(const std::vector<std::vector<SeriesK>>& rows);

  int dim() const { return n_; }
  SeriesK& at(int r, int c) { return e_[static_cast<size_t>(r * n_ + c)]; }
  const SeriesK& at(int r, int c) const { return e_[static_cast<size_t>(r * n_ + c)]; }
  bool is_toeplitz() const { return symbol_.has_value(); }
  // symbol index j-k, valid only for Toeplitz matrices
  const SeriesK& symbol(int idx) const;
  bool is_symmetric_toeplitz() const;
  int min_order() const;
  int min_valuation() const;

 private:
  int n_ = 0;
  std::vector<SeriesK> e_;
  std::optional<std::vector<SeriesK>> symbol_;  // index j-k+n-1
};

// fraction-free elimination with valuation-aware pivoting; falls back to the
// division-free minor expansion when no pivot with zero valuation exists
SeriesK det_series(const SeriesMatrix& m);
// division-free expansion over column subsets
SeriesK det_cofactor(const SeriesMatrix& m);
SeriesK det_bareiss(const SeriesMatrix& m, bool* used_fallback = nullptr);

// Toeplitz determinant through k^target, asking gen(index, korder) for more
// terms until the guaranteed order is reached
SeriesK toeplitz_det_to_order(int dim, const std::function<SeriesK(int, int)>& gen, int target);

struct WilfFactors {
  SeriesMatrix plus;   // block built from A + B J (bordered for odd size)
  SeriesMatrix minus;  // block A - B J (empty for size 1)
  SeriesK det_plus;
  SeriesK det_minus;
};
WilfFactors wilf_factor_matrices(const SeriesMatrix& m);
std::pair<SeriesK, SeriesK> wilf_factor(const SeriesMatrix& m);

}  // namespace ising

#endif
