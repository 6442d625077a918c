#include "ising/recursion.hpp"

#include "ising/hypergeometric.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>

namespace ising {

ComplexSeries ComplexSeries::real(SeriesK s) {
  int o = s.order();
  return {std::move(s), SeriesK::zero(o)};
}

ComplexSeries ComplexSeries::imag(SeriesK s) {
  int o = s.order();
  return {SeriesK::zero(o), std::move(s)};
}

int ComplexSeries::order() const { return std::min(re.order(), im.order()); }

ComplexSeries ComplexSeries::truncate(int order) const { return {re.truncate(order), im.truncate(order)}; }

std::string ComplexSeries::to_string() const {
  if (im.is_zero()) return re.to_string();
  if (re.is_zero()) return "i*(" + im.to_string() + ")";
  return re.to_string() + " + i*(" + im.to_string() + ")";
}

ComplexSeries operator+(const ComplexSeries& a, const ComplexSeries& b) { return {a.re + b.re, a.im + b.im}; }
ComplexSeries operator-(const ComplexSeries& a, const ComplexSeries& b) { return {a.re - b.re, a.im - b.im}; }
ComplexSeries operator-(const ComplexSeries& a) { return {-a.re, -a.im}; }

ComplexSeries operator*(const ComplexSeries& a, const ComplexSeries& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

ComplexSeries operator/(const ComplexSeries& a, const ComplexSeries& b) {
  if (b.im.is_zero()) return {a.re / b.re, a.im / b.re};
  if (b.re.is_zero()) return {a.im / b.im, -(a.re / b.im)};
  SeriesK den = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
}

CorrTable::CorrTable(Regime r, int maxM, int maxN)
    : regime_(r), maxM_(maxM), maxN_(maxN), cells_(static_cast<size_t>((maxM + 1) * (maxN + 1))) {}

bool CorrTable::in_range(int M, int N) const { return std::abs(M) <= maxM_ && std::abs(N) <= maxN_; }

const TableEntry& CorrTable::at(int M, int N) const {
  M = std::abs(M);
  N = std::abs(N);
  if (M > maxM_ || N > maxN_) throw SeriesError("CorrTable: index out of range");
  return cells_[static_cast<size_t>(M * (maxN_ + 1) + N)];
}

TableEntry& CorrTable::at(int M, int N) { return const_cast<TableEntry&>(std::as_const(*this).at(M, N)); }

bool CorrTable::complete() const {
  return std::all_of(cells_.begin(), cells_.end(), [](const TableEntry& e) { return e.known; });
}

bool RecursionResult::all_residuals_vanish() const {
  return std::all_of(residuals.begin(), residuals.end(), [](const RelationResidual& r) { return r.vanishes; });
}

namespace {

struct Ref {
  int table;  // 0 low, 1 high
  int M, N;
};

bool same(const Ref& a, const Ref& b) {
  return a.table == b.table && std::abs(a.M) == std::abs(b.M) && std::abs(a.N) == std::abs(b.N);
}

struct Term {
  Rational c;
  int kpow;
  Ref a, b;
};

struct Relation {
  std::string name;
  int M, N;
  std::vector<Term> terms;
};

// Written with C the high-T table and C_d the low-T one; the couplings are then
// those of the low-T side: s_h^2 = -1, s_v^2 = -1/k^2, s_v s_h = 1/k.
Relation quad1(int M, int N) {
  return {"Q1", M, N,
          {{Rational(-1), 0, {0, M, N}, {0, M, N}},
           {Rational(1), 0, {0, M, N - 1}, {0, M, N + 1}},
           {Rational(1), 0, {1, M, N}, {1, M, N}},
           {Rational(-1), 0, {1, M - 1, N}, {1, M + 1, N}}}};
}

Relation quad2(int M, int N) {
  return {"Q2", M, N,
          {{Rational(-1), -2, {0, M, N}, {0, M, N}},
           {Rational(1), -2, {0, M - 1, N}, {0, M + 1, N}},
           {Rational(1), 0, {1, M, N}, {1, M, N}},
           {Rational(-1), 0, {1, M, N - 1}, {1, M, N + 1}}}};
}

Relation quad3(int M, int N) {
  return {"Q3", M, N,
          {{Rational(1), -1, {0, M, N}, {0, M + 1, N + 1}},
           {Rational(-1), -1, {0, M, N + 1}, {0, M + 1, N}},
           {Rational(-1), 0, {1, M, N}, {1, M + 1, N + 1}},
           {Rational(1), 0, {1, M, N + 1}, {1, M + 1, N}}}};
}

class Solver {
 public:
  Solver(int gm, int gn, int w) : w_(w) {
    t_[0] = CorrTable(Regime::LowT, gm, gn);
    t_[1] = CorrTable(Regime::HighT, gm, gn);
    for (int M = 0; M < gm; ++M)
      for (int N = 0; N < gn; ++N) {
        if (M == 0 && N == 0) continue;  // the seed relation replaces Q1 here
        add(quad1(M, N));
      }
    for (int M = 0; M < gm; ++M)
      for (int N = 0; N < gn; ++N) add(quad2(M, N));
    for (int M = 0; M < gm; ++M)
      for (int N = 0; N < gn; ++N) add(quad3(M, N));
  }

  CorrTable& table(int i) { return t_[i]; }

  void set(int table, int M, int N, ComplexSeries v, std::string src) {
    TableEntry& e = t_[table].at(M, N);
    e.known = true;
    e.value = std::move(v);
    e.source = std::move(src);
  }

  bool known(const Ref& r) const { return t_[r.table].in_range(r.M, r.N) && t_[r.table].at(r.M, r.N).known; }
  const ComplexSeries& val(const Ref& r) const { return t_[r.table].at(r.M, r.N).value; }

  ComplexSeries coeff(const Term& tm) const { return ComplexSeries::real(SeriesK::monomial(tm.c, tm.kpow, w_)); }

  // b X^2 + a X + r = 0 for unknown x; nullopt if another entry is missing
  struct Split {
    ComplexSeries a, b, r;
    bool has_a = false, has_b = false;
  };

  std::optional<Split> split(const Relation& rel, const Ref& x) const {
    Split s{zero(), zero(), zero()};
    for (const Term& tm : rel.terms) {
      bool ax = same(tm.a, x), bx = same(tm.b, x);
      if (ax && bx) {
        s.b = s.b + coeff(tm);
        s.has_b = true;
      } else if (ax || bx) {
        const Ref& o = ax ? tm.b : tm.a;
        if (!known(o)) return std::nullopt;
        s.a = s.a + coeff(tm) * val(o);
        s.has_a = true;
      } else {
        if (!known(tm.a) || !known(tm.b)) return std::nullopt;
        s.r = s.r + coeff(tm) * val(tm.a) * val(tm.b);
      }
    }
    return s;
  }

  std::optional<ComplexSeries> residual(const Relation& rel) const {
    ComplexSeries s = zero();
    for (const Term& tm : rel.terms) {
      if (!known(tm.a) || !known(tm.b)) return std::nullopt;
      s = s + coeff(tm) * val(tm.a) * val(tm.b);
    }
    return s;
  }

  bool involves(const Relation& rel, const Ref& x) const {
    for (const Term& tm : rel.terms)
      if (same(tm.a, x) || same(tm.b, x)) return true;
    return false;
  }

  bool inside(const Relation& rel) const {
    for (const Term& tm : rel.terms)
      if (!t_[tm.a.table].in_range(tm.a.M, tm.a.N) || !t_[tm.b.table].in_range(tm.b.M, tm.b.N)) return false;
    return true;
  }

  std::vector<Ref> unknowns_in_order() const {
    std::vector<Ref> out;
    int gm = t_[0].max_m(), gn = t_[0].max_n();
    for (int s = 0; s <= gm + gn; ++s)
      for (int M = 0; M <= std::min(s, gm); ++M) {
        int N = s - M;
        if (N > gn) continue;
        for (int tb = 0; tb < 2; ++tb)
          if (!t_[tb].at(M, N).known) out.push_back({tb, M, N});
      }
    return out;
  }

  bool try_linear(const Ref& x) {
    for (const Relation& rel : rels_) {
      if (!involves(rel, x)) continue;
      auto s = split(rel, x);
      if (!s || s->has_b || !s->has_a || s->a.is_zero()) continue;
      set(x.table, x.M, x.N, -(s->r) / s->a, rel.name + "(" + std::to_string(rel.M) + "," + std::to_string(rel.N) + ")");
      return true;
    }
    return false;
  }

  // candidates from X^2 = -r/b; the sign is fixed by the other relations that
  // become fully known, or for the real low-T table by a positive k^0 term
  bool try_square(const Ref& x) {
    for (const Relation& rel : rels_) {
      if (!involves(rel, x)) continue;
      auto s = split(rel, x);
      if (!s || !s->has_b || (s->has_a && !s->a.is_zero()) || s->b.is_zero()) continue;
      ComplexSeries sq = -(s->r) / s->b;
      std::vector<ComplexSeries> cands;
      if (sq.is_zero()) {
        cands.push_back(sq);
      } else if (!sq.im.is_zero()) {
        continue;
      } else {
        Rational lead = sq.re[sq.re.valuation()];
        if (sgn(lead) > 0) {
          SeriesK r = series_sqrt(sq.re);
          cands.push_back(ComplexSeries::real(r));
          cands.push_back(ComplexSeries::real(-r));
        } else {
          SeriesK r = series_sqrt(-sq.re);
          cands.push_back(ComplexSeries::imag(r));
          cands.push_back(ComplexSeries::imag(-r));
        }
      }
      std::string src = rel.name + "(" + std::to_string(rel.M) + "," + std::to_string(rel.N) + ")";
      std::vector<ComplexSeries> ok;
      int checks = 0;
      for (const ComplexSeries& c : cands) {
        set(x.table, x.M, x.N, c, src);
        bool good = true;
        checks = 0;
        for (const Relation& other : rels_) {
          if (&other == &rel || !involves(other, x)) continue;
          auto res = residual(other);
          if (!res) continue;
          ++checks;
          if (!res->truncate(c.order() - 2).is_zero()) {
            good = false;
            break;
          }
        }
        if (good) ok.push_back(c);
      }
      t_[x.table].at(x.M, x.N).known = false;
      ComplexSeries pick;
      if (ok.size() == 1 || (ok.size() == 2 && cands.size() == 1)) {
        pick = ok.front();
      } else if (ok.size() == 2 && x.table == 0 && ok[0].im.is_zero()) {
        pick = sgn(ok[0].re[0]) > 0 ? ok[0] : ok[1];
      } else {
        continue;
      }
      set(x.table, x.M, x.N, pick, src + " sqrt");
      return true;
    }
    return false;
  }

  void run() {
    for (;;) {
      bool progress = false;
      for (const Ref& x : unknowns_in_order())
        if (try_linear(x)) progress = true;
      if (progress) continue;
      for (const Ref& x : unknowns_in_order())
        if (try_square(x)) {
          progress = true;
          break;
        }
      if (progress) continue;
      // stalled: relations through a high-T cell with M < N, M+N odd have
      // vanishing cofactors, so fall back on the parity zero for the first one
      for (const Ref& x : unknowns_in_order())
        if (x.table == 1 && x.M < x.N && (x.M + x.N) % 2 != 0) {
          set(1, x.M, x.N, zero(), "parity");
          progress = true;
          break;
        }
      if (!progress) break;
    }
  }

  std::vector<RelationResidual> residuals() const {
    std::vector<RelationResidual> out;
    for (const Relation& rel : rels_) {
      auto r = residual(rel);
      if (!r) continue;
      out.push_back({rel.name, rel.M, rel.N, *r, r->is_zero()});
    }
    return out;
  }

  ComplexSeries zero() const { return ComplexSeries::real(SeriesK::zero(w_)); }

 private:
  void add(Relation r) {
    if (inside(r)) rels_.push_back(std::move(r));
  }

  int w_;
  CorrTable t_[2];
  std::vector<Relation> rels_;
};

}  // namespace

RecursionResult corr_recursion_table(int maxM, int maxN, int order) {
  if (maxM < 0 || maxN < 0 || order < 0) throw SeriesError("corr_recursion_table: negative bound");
  // working grid: axis extensions need the row one step beyond each target
  int gm = maxM + 3;
  int gn = maxN + maxM + 4;
  for (int pad = 6;; pad += 6) {
    int w = order + pad;
    Solver sv(gm, gn, w);
    for (int tb = 0; tb < 2; ++tb) {
      Regime reg = tb == 0 ? Regime::LowT : Regime::HighT;
      sv.set(tb, 0, 0, ComplexSeries::real(SeriesK::constant(1, w)), "unit");
      for (int N = 1; N <= gn; ++N) sv.set(tb, 0, N, ComplexSeries::real(corr_row(N, reg, w).series), "row");
      for (int N = 1; N <= std::min(gm, gn); ++N)
        sv.set(tb, N, N, ComplexSeries::real(corr_diag(N, reg, w).series), "diag");
    }

    // seed relations at the origin:
    // low  C(1,0) = (1 + s_h^2)^{1/2} - s_h C_d(0,1) with s_h = i k (high-T couplings)
    // high C(1,0) = (1 + s_h^2)^{1/2} - s_h C_d(0,1) with s_h = i (low-T couplings)
    const ComplexSeries& h01 = sv.table(1).at(0, 1).value;
    const ComplexSeries& l01 = sv.table(0).at(0, 1).value;
    ComplexSeries ik = ComplexSeries::imag(SeriesK::k(w));
    ComplexSeries i1 = ComplexSeries::imag(SeriesK::constant(1, w));
    sv.set(0, 1, 0, ComplexSeries::real(one_minus_t_pow(Rational(1, 2), w)) - ik * h01, "seed");
    sv.set(1, 1, 0, sv.zero() - i1 * l01, "seed");

    sv.run();
    for (int tb = 0; tb < 2; ++tb)
      for (int M = 0; M <= maxM; ++M)
        for (int N = 0; N <= maxN; ++N)
          if (!sv.table(tb).at(M, N).known)
            throw SeriesError("corr_recursion_table: unreachable entry " + std::string(tb ? "high" : "low") + " C(" +
                              std::to_string(M) + "," + std::to_string(N) + ")");

    int got = w;
    for (int tb = 0; tb < 2; ++tb)
      for (int M = 0; M <= maxM; ++M)
        for (int N = 0; N <= maxN; ++N) got = std::min(got, sv.table(tb).at(M, N).value.order());
    if (got < order) {
      if (pad > 60) throw SeriesError("corr_recursion_table: precision loss too large");
      continue;
    }

    RecursionResult res;
    res.low = CorrTable(Regime::LowT, maxM, maxN);
    res.high = CorrTable(Regime::HighT, maxM, maxN);
    for (int M = 0; M <= maxM; ++M)
      for (int N = 0; N <= maxN; ++N) {
        TableEntry l = sv.table(0).at(M, N), h = sv.table(1).at(M, N);
        l.value = l.value.truncate(order);
        h.value = h.value.truncate(order);
        res.low.at(M, N) = l;
        res.high.at(M, N) = h;
      }
    res.residuals = sv.residuals();
    // the remaining seed relations, for C(0,1), serve as checks
    // low  C(0,1) = (1 + s_v^2)^{1/2} - s_v C_d(1,0), s_v = -i
    // high C(0,1) = (1 + s_v^2)^{1/2} - s_v C_d(1,0), s_v = -i/k, (1 - 1/k^2)^{1/2} -> -(i/k)(1-k^2)^{1/2}
    {
      ComplexSeries r = sv.table(0).at(0, 1).value - i1 * sv.table(1).at(1, 0).value;
      res.residuals.push_back({"S01", 0, 1, r, r.is_zero()});
      ComplexSeries ikinv = ComplexSeries::imag(SeriesK::monomial(1, -1, w));
      ComplexSeries root = sv.zero() - ikinv * ComplexSeries::real(one_minus_t_pow(Rational(1, 2), w));
      ComplexSeries r2 = sv.table(1).at(0, 1).value - (root + ikinv * sv.table(0).at(1, 0).value);
      res.residuals.push_back({"S01", 0, 1, r2, r2.is_zero()});
    }
    return res;
  }
}

}  // namespace ising
