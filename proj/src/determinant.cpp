#include "ising/determinant.hpp"

#include <algorithm>
#include <climits>
#include <unordered_map>

namespace ising {

SeriesMatrix::SeriesMatrix(int dim) : n_(dim), e_(static_cast<size_t>(dim * dim)) {
  if (dim < 0) throw SeriesError("negative matrix dimension");
}

SeriesMatrix SeriesMatrix::toeplitz(int dim, const std::function<SeriesK(int)>& gen) {
  SeriesMatrix m(dim);
  std::vector<SeriesK> sym;
  for (int d = -(dim - 1); d <= dim - 1; ++d) sym.push_back(gen(d));
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) m.at(r, c) = sym[static_cast<size_t>(r - c + dim - 1)];
  m.symbol_ = std::move(sym);
  return m;
}

SeriesMatrix SeriesMatrix::from_rows(const std::vector<std::vector<SeriesK>>& rows) {
  int n = static_cast<int>(rows.size());
  SeriesMatrix m(n);
  for (int r = 0; r < n; ++r) {
    if (static_cast<int>(rows[static_cast<size_t>(r)].size()) != n) throw SeriesError("matrix is not square");
    for (int c = 0; c < n; ++c) m.at(r, c) = rows[static_cast<size_t>(r)][static_cast<size_t>(c)];
  }
  return m;
}

const SeriesK& SeriesMatrix::symbol(int idx) const {
  if (!symbol_) throw SeriesError("matrix carries no Toeplitz symbol");
  return (*symbol_)[static_cast<size_t>(idx + n_ - 1)];
}

bool SeriesMatrix::is_symmetric_toeplitz() const {
  for (int r = 0; r < n_; ++r)
    for (int c = 0; c < n_; ++c) {
      int d = std::abs(r - c);
      if (!at(r, c).agrees_with(at(d, 0)) || !at(r, c).agrees_with(at(0, d))) return false;
    }
  return true;
}

int SeriesMatrix::min_order() const {
  int o = INT_MAX;
  for (const auto& s : e_) o = std::min(o, s.order());
  return o;
}

int SeriesMatrix::min_valuation() const {
  int v = INT_MAX;
  for (const auto& s : e_)
    if (!s.is_zero()) v = std::min(v, s.valuation());
  return v;
}

SeriesK det_cofactor(const SeriesMatrix& m) {
  int n = m.dim();
  if (n == 0) return SeriesK::constant(1, 0);
  Var v = m.at(0, 0).var();
  // minors of the last (n-r) rows indexed by the column subset they use
  std::unordered_map<unsigned, SeriesK> cur, next;
  for (int c = 0; c < n; ++c) cur.emplace(1u << c, m.at(n - 1, c));
  for (int r = n - 2; r >= 0; --r) {
    next.clear();
    for (const auto& [mask, minor] : cur) {
      int sign = 1;
      // columns not in mask, in increasing order; sign counts columns in mask to the left
      for (int c = 0; c < n; ++c) {
        if (mask & (1u << c)) continue;
        int left = __builtin_popcount(mask & ((1u << c) - 1));
        sign = (left % 2 == 0) ? 1 : -1;
        SeriesK term = m.at(r, c) * minor;
        if (sign < 0) term = -term;
        unsigned nm = mask | (1u << c);
        auto it = next.find(nm);
        if (it == next.end()) next.emplace(nm, std::move(term));
        else it->second += term;
      }
    }
    std::swap(cur, next);
  }
  SeriesK d = cur.begin()->second;
  return d.var() == v ? d : d.with_var(v);
}

SeriesK det_bareiss(const SeriesMatrix& m, bool* used_fallback) {
  int n = m.dim();
  if (used_fallback) *used_fallback = false;
  if (n == 0) return SeriesK::constant(1, 0);
  std::vector<std::vector<SeriesK>> a(static_cast<size_t>(n), std::vector<SeriesK>(static_cast<size_t>(n)));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) a[static_cast<size_t>(r)][static_cast<size_t>(c)] = m.at(r, c);
  int sign = 1;
  SeriesK prev = SeriesK::constant(1, m.min_order() + 1, m.at(0, 0).var());
  for (int k = 0; k < n - 1; ++k) {
    int piv = -1;
    for (int r = k; r < n; ++r) {
      const SeriesK& e = a[static_cast<size_t>(r)][static_cast<size_t>(k)];
      if (!e.is_zero() && e.valuation() == 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) {
      if (used_fallback) *used_fallback = true;
      return det_cofactor(m);
    }
    if (piv != k) {
      std::swap(a[static_cast<size_t>(piv)], a[static_cast<size_t>(k)]);
      sign = -sign;
    }
    const SeriesK& p = a[static_cast<size_t>(k)][static_cast<size_t>(k)];
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        auto& aij = a[static_cast<size_t>(i)][static_cast<size_t>(j)];
        aij = (p * aij - a[static_cast<size_t>(i)][static_cast<size_t>(k)] * a[static_cast<size_t>(k)][static_cast<size_t>(j)]) / prev;
      }
    prev = p;
  }
  SeriesK d = a[static_cast<size_t>(n - 1)][static_cast<size_t>(n - 1)];
  return sign < 0 ? -d : d;
}

SeriesK det_series(const SeriesMatrix& m) {
  if (m.dim() <= 0) throw SeriesError("det_series: dimension must be >= 1");
  return det_bareiss(m);
}

SeriesK toeplitz_det_to_order(int dim, const std::function<SeriesK(int, int)>& gen, int target) {
  return compute_to_order(target, [&](int work) {
    SeriesMatrix m = SeriesMatrix::toeplitz(dim, [&](int idx) { return gen(idx, work); });
    int v = m.min_valuation();
    if (v != INT_MAX && v < 0) {
      // negative valuations drain order; ask for more terms
      int extra = -v * dim;
      m = SeriesMatrix::toeplitz(dim, [&](int idx) { return gen(idx, work + extra); });
    }
    return det_series(m);
  });
}

WilfFactors wilf_factor_matrices(const SeriesMatrix& t) {
  if (!t.is_symmetric_toeplitz()) throw SeriesError("wilf_factor: matrix is not symmetric Toeplitz");
  int n = t.dim();
  int h = n / 2;
  bool odd = n % 2 != 0;
  WilfFactors w;
  int pd = odd ? h + 1 : h;
  w.plus = SeriesMatrix(pd);
  w.minus = SeriesMatrix(h);
  for (int r = 0; r < h; ++r)
    for (int c = 0; c < h; ++c) {
      // (B J)_{rc} = T[r][n-1-c]
      const SeriesK& a = t.at(r, c);
      const SeriesK& bj = t.at(r, n - 1 - c);
      w.plus.at(r, c) = a + bj;
      w.minus.at(r, c) = a - bj;
    }
  if (odd) {
    for (int r = 0; r < h; ++r) {
      w.plus.at(r, h) = Rational(2) * t.at(r, h);
      w.plus.at(h, r) = t.at(h, r);
    }
    w.plus.at(h, h) = t.at(h, h);
  }
  w.det_plus = det_series(w.plus);
  Var v = t.at(0, 0).var();
  w.det_minus = h > 0 ? det_series(w.minus) : SeriesK::constant(1, t.min_order(), v);
  return w;
}

std::pair<SeriesK, SeriesK> wilf_factor(const SeriesMatrix& m) {
  WilfFactors w = wilf_factor_matrices(m);
  return {w.det_plus, w.det_minus};
}

}  // namespace ising
