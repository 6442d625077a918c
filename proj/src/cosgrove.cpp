#include "ising/cosgrove.hpp"

#include <algorithm>

namespace ising {

LinearSolve solve_linear(std::vector<std::vector<Rational>> A, std::vector<Rational> b) {
  LinearSolve out;
  size_t rows = A.size(), cols = rows ? A[0].size() : 0;
  std::vector<int> pivot_col;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && A[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(A[p], A[r]);
    std::swap(b[p], b[r]);
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || A[i][c] == 0) continue;
      Rational f = A[i][c] / A[r][c];
      for (size_t j = c; j < cols; ++j) A[i][j] -= f * A[r][j];
      b[i] -= f * b[r];
    }
    pivot_col.push_back(static_cast<int>(c));
    ++r;
  }
  out.rank = static_cast<int>(r);
  out.consistent = true;
  for (size_t i = r; i < rows; ++i)
    if (b[i] != 0) out.consistent = false;
  out.x.assign(cols, Rational(0));
  for (size_t i = 0; i < r; ++i) out.x[pivot_col[i]] = b[i] / A[i][pivot_col[i]];
  return out;
}

CosgroveFit cosgrove_fit(const SeriesK& y, int budget) {
  CosgroveFit fit;
  CosgroveParams zero;
  SeriesK base = cosgrove_residual(y, zero);
  // residual is affine in the parameters: basis_i = residual(e_i) - residual(0)
  std::vector<SeriesK> basis;
  for (int i = 0; i < 6; ++i) {
    std::array<Rational, 6> e{};
    e[i] = 1;
    basis.push_back(cosgrove_residual(y, CosgroveParams::from_array(e)) - base);
  }
  int known = base.order() / 2;
  for (const auto& s : basis) known = std::min(known, s.order() / 2);
  if (budget > known) {
    fit.diagnostic = "budget clamped to t^" + std::to_string(known);
    budget = known;
  }
  if (budget < 0) {
    fit.diagnostic = "series too short for a fit";
    return fit;
  }
  std::vector<std::vector<Rational>> A;
  std::vector<Rational> b;
  for (int p = 0; p <= budget; ++p) {
    std::vector<Rational> row;
    for (const auto& s : basis) row.push_back(s.coeff_t(p));
    A.push_back(row);
    b.push_back(-base.coeff_t(p));
  }
  fit.equations = budget + 1;
  LinearSolve ls = solve_linear(A, b);
  fit.rank = ls.rank;
  fit.consistent = ls.consistent;
  if (!ls.consistent) {
    if (!fit.diagnostic.empty()) fit.diagnostic += "; ";
    fit.diagnostic += "inconsistent system: no Cosgrove equation fits";
    return fit;
  }
  fit.solution_dim = 6 - ls.rank;
  fit.surplus = fit.equations - ls.rank;
  std::array<Rational, 6> x;
  std::copy(ls.x.begin(), ls.x.end(), x.begin());
  fit.params = CosgroveParams::from_array(x);
  if (fit.solution_dim > 0) {
    if (!fit.diagnostic.empty()) fit.diagnostic += "; ";
    fit.diagnostic += "rank deficient: " + std::to_string(fit.solution_dim) +
                      "-dimensional solution family (particular solution reported)";
  }
  return fit;
}

namespace {

std::vector<Integer> divisors(Integer n) {
  if (n < 0) n = -n;
  std::vector<Integer> small, large;
  for (Integer d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

Rational eval(const std::vector<Rational>& c, const Rational& x) {
  Rational r = 0;
  for (size_t i = c.size(); i-- > 0;) r = r * x + c[i];
  return r;
}

// divide by (x - root); c ascending
std::vector<Rational> deflate(const std::vector<Rational>& c, const Rational& root) {
  size_t n = c.size() - 1;
  std::vector<Rational> q(n);
  Rational carry = 0;
  for (size_t i = n; i-- > 0;) {
    carry = c[i + 1] + carry * root;
    q[i] = carry;
  }
  return q;
}

}  // namespace

std::optional<std::vector<Rational>> rational_roots(std::vector<Rational> c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
  std::vector<Rational> roots;
  if (c.size() <= 1) return roots;
  while (c.size() > 1 && c.front() == 0) {
    roots.push_back(0);
    c.erase(c.begin());
  }
  while (c.size() > 1) {
    Integer l = 1;
    for (const auto& x : c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    Integer a0 = Rational(c.front() * l).get_num(), an = Rational(c.back() * l).get_num();
    std::optional<Rational> found;
    for (const auto& p : divisors(a0)) {
      for (const auto& q : divisors(an)) {
        for (int sgn : {1, -1}) {
          Rational cand(p * sgn, q);
          cand.canonicalize();
          if (eval(c, cand) == 0) {
            found = cand;
            break;
          }
        }
        if (found) break;
      }
      if (found) break;
    }
    if (!found) return std::nullopt;
    roots.push_back(*found);
    c = deflate(c, *found);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

OkamotoReduction cosgrove_to_okamoto(const CosgroveParams& p) {
  OkamotoReduction r;
  Rational A = -p.c5;
  Rational B = p.c6 / 2 + p.c5;
  r.A = A;
  r.B = B;
  CosgroveParams& q = r.tilde;
  q.c5 = p.c5 + A;
  q.c6 = p.c6 - 2 * B - 2 * A;
  q.c7 = p.c7 + B;
  q.c8 = p.c8 - 2 * A * B - A * A - 2 * B * p.c5 + A * p.c6;
  q.c9 = p.c9 + B * B + 2 * A * B - B * p.c6 + 2 * A * p.c7;
  q.c10 = p.c10 + A * B * B + A * A * B + B * B * p.c5 - A * B * p.c6 + A * A * p.c7 - B * p.c8 +
          A * p.c9;
  if (q.c5 != 0 || q.c6 != 0) {
    r.diagnostic = "shifted equation keeps c5/c6 terms; not of Okamoto type";
    return r;
  }
  r.e1 = -4 * q.c7;
  r.e2 = -4 * q.c9 - 2 * q.c8;
  r.e3 = -4 * q.c10;
  r.e4 = q.c8 * q.c8;
  // x^4 - e1 x^3 + e2 x^2 - e3 x + e4 with x = n^2
  auto roots = rational_roots({r.e4, -r.e3, r.e2, -r.e1, Rational(1)});
  if (!roots || roots->size() != 4) {
    r.diagnostic = "quartic in n^2 has irrational roots";
    return r;
  }
  OkamotoN n;
  for (int i = 0; i < 4; ++i) {
    Rational x = (*roots)[static_cast<size_t>(i)];
    if (x < 0) {
      r.diagnostic = "negative root for n^2";
      return r;
    }
    auto s = rational_root(x, 2);
    if (!s) {
      r.diagnostic = "n^2 = " + to_string(x) + " is not a rational square";
      return r;
    }
    n[static_cast<size_t>(i)] = *s;
  }
  Rational target = -q.c8;
  Rational prod = n[0] * n[1] * n[2] * n[3];
  if (prod != target && prod != -target) {
    r.diagnostic = "no sign choice gives n1 n2 n3 n4 = -c8~";
    return r;
  }
  if (prod != target) n[3] = -n[3];
  OkamotoForm f;
  f.n = okamoto_canonical(n);
  f.shiftA = A;
  f.shiftB = B;
  r.candidates.push_back(f);
  return r;
}

OkamotoReduction cosgrove_to_okamoto(const CosgroveParams& p, const SeriesK& y) {
  OkamotoReduction r = cosgrove_to_okamoto(p);
  SeriesK t = SeriesK::t(y.order() + 4);
  SeriesK h = (y.as_t() - r.A * t - r.B).truncate(y.order());
  for (auto& f : r.candidates) f.hSeries = h.as_t();
  return r;
}

}  // namespace ising
