#include "ising/boundary.hpp"

#include "ising/cosgrove.hpp"
#include "ising/hypergeometric.hpp"

#include <array>
#include <functional>

namespace ising {

std::string to_string(Branch b) { return "B" + std::to_string(static_cast<int>(b)); }

Branch parse_branch(const std::string& s) {
  std::string t = s;
  if (!t.empty() && (t[0] == 'B' || t[0] == 'b')) t = t.substr(1);
  if (t == "1") return Branch::B1;
  if (t == "2") return Branch::B2;
  if (t == "3") return Branch::B3;
  if (t == "4") return Branch::B4;
  throw std::invalid_argument("unknown branch: " + s);
}

namespace {

// each branch is case 4 with two signs flipped
OkamotoN flipped(const OkamotoN& n, Branch b) {
  OkamotoN m = n;
  switch (b) {
    case Branch::B1: m[2] = -m[2]; m[3] = -m[3]; break;
    case Branch::B2: m[0] = -m[0]; m[3] = -m[3]; break;
    case Branch::B3: m[1] = -m[1]; m[3] = -m[3]; break;
    case Branch::B4: break;
  }
  return m;
}

Rational N3_case4(const OkamotoN& m) {
  const Rational &a = m[0], &b = m[1], &c = m[2], &d = m[3];
  return a * a * b + a * a * c + a * a * d + b * b * c + b * b * d + c * c * d + a * b * b + a * c * c +
         a * d * d + b * c * c + b * d * d + c * d * d + a * b * c + a * b * d + a * c * d + b * c * d -
         a - b - c - d;
}

Rational e2sq(const OkamotoN& n) {
  Rational s = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) s += n[i] * n[i] * n[j] * n[j];
  return s;
}

Rational e1sq(const OkamotoN& n) {
  Rational s = 0;
  for (const auto& x : n) s += x * x;
  return s;
}

Rational prodn(const OkamotoN& n) { return n[0] * n[1] * n[2] * n[3]; }

// Coefficients are carried as exact Laurent series in a perturbation eps of n,
// n(eps) = n + eps*delta.  At the Ising parameters the order-k equations
// degenerate (a common factor vanishes, and h'(0) = -n_i^2 is a singular value), so
// each branch is defined as the eps -> 0 limit of the generic branch.  A resonance is
// an order where the limit depends on the direction delta.
using EPoly = std::vector<SeriesK>;

struct EpsCtx {
  int prec;
  OkamotoN delta;
  std::array<SeriesK, 4> n;   // n_i(eps)
  std::array<SeriesK, 4> n2;  // n_i(eps)^2
  SeriesK P;
};

EpsCtx make_ctx(const OkamotoN& n, const OkamotoN& delta, int prec) {
  EpsCtx c;
  c.prec = prec;
  c.delta = delta;
  for (int i = 0; i < 4; ++i) {
    c.n[i] = SeriesK::constant(n[i], prec) + SeriesK::monomial(delta[i], 1, prec);
    c.n2[i] = c.n[i] * c.n[i];
  }
  c.P = c.n[0] * c.n[1] * c.n[2] * c.n[3];
  return c;
}

EPoly emul(const EPoly& a, const EPoly& b, int deg, int prec) {
  EPoly r(static_cast<size_t>(deg + 1), SeriesK::zero(prec));
  for (int i = 0; i <= deg && i < static_cast<int>(a.size()); ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j <= deg && j < static_cast<int>(b.size()); ++j)
      if (!b[j].is_zero()) r[i + j] += a[i] * b[j];
  }
  return r;
}

EPoly ederiv(const EPoly& a, int prec) {
  EPoly r(a.size(), SeriesK::zero(prec));
  for (size_t i = 1; i < a.size(); ++i) r[i - 1] = Rational(static_cast<long>(i)) * a[i];
  return r;
}

// t^k coefficient of the Okamoto residual with eps-series coefficients
SeriesK residual_coeff_eps(const EPoly& cin, const EpsCtx& ctx, int k) {
  int deg = k + 2;
  EPoly h(static_cast<size_t>(deg + 1), SeriesK::zero(ctx.prec));
  for (size_t i = 0; i < cin.size() && static_cast<int>(i) <= deg; ++i) h[i] = cin[i];
  EPoly p = ederiv(h, ctx.prec), s = ederiv(p, ctx.prec);
  EPoly L(h.size(), SeriesK::zero(ctx.prec)), q(h.size(), SeriesK::zero(ctx.prec));
  for (int i = 0; i <= deg; ++i) {
    if (i >= 2) L[i] += s[i - 2];
    if (i >= 1) L[i] -= s[i - 1];
    q[i] = Rational(2) * h[i] + p[i];
    if (i >= 1) q[i] -= Rational(2) * p[i - 1];
  }
  EPoly mid = emul(p, q, k, ctx.prec);
  mid[0] += ctx.P;
  EPoly r1 = emul(emul(p, L, k, ctx.prec), L, k, ctx.prec);
  EPoly r2 = emul(mid, mid, k, ctx.prec);
  EPoly pr;
  for (int i = 0; i < 4; ++i) {
    EPoly f = p;
    f.resize(static_cast<size_t>(k + 1), SeriesK::zero(ctx.prec));
    f[0] += ctx.n2[i];
    pr = i == 0 ? f : emul(pr, f, k, ctx.prec);
  }
  return r1[k] + r2[k] - pr[k];
}

Rational lim0(const SeriesK& s) { return s.valuation() > 0 || s.is_zero() ? Rational(0) : s[0]; }

class PrecisionLost : public std::runtime_error {
 public:
  PrecisionLost() : std::runtime_error("eps precision exhausted") {}
};

// the ratio -b/a as an eps-series that must be finite at eps = 0
SeriesK finite_ratio(const SeriesK& b, const SeriesK& a, int k) {
  if (a.is_zero()) {
    if (a.order() < 0 || b.is_zero()) throw PrecisionLost();
    throw BoundaryError("no analytic solution on this branch: vanishing pivot at order " + std::to_string(k));
  }
  if (a.valuation() > a.order()) throw PrecisionLost();
  SeriesK r = -(b / a);
  if (r.order() < 0) throw PrecisionLost();
  if (!r.is_zero() && r.valuation() < 0)
    throw BoundaryError("no analytic solution on this branch: obstruction at resonance order " +
                        std::to_string(k));
  return r;
}

using FreeFn = std::function<std::optional<Rational>(int)>;

struct Run {
  EpsCtx ctx;
  EPoly c;
};

// closed-form c0, c1 of the branch at n(eps)
void seed_run(Run& run, Branch b) {
  std::array<SeriesK, 4> m = run.ctx.n;
  switch (b) {
    case Branch::B1: m[2] = -m[2]; m[3] = -m[3]; break;
    case Branch::B2: m[0] = -m[0]; m[3] = -m[3]; break;
    case Branch::B3: m[1] = -m[1]; m[3] = -m[3]; break;
    case Branch::B4: break;
  }
  SeriesK ab = m[0] * m[1], cd = m[2] * m[3], s12 = m[0] + m[1], s34 = m[2] + m[3];
  run.c = {Rational(-1, 2) * (ab + cd + s12 * s34)};
  SeriesK D = s12 + s34;
  SeriesK num = s12 * cd + ab * s34;
  run.c.push_back(D.is_zero() ? SeriesK::zero(run.ctx.prec) : num / D);
}

// phase 1: eps-limit recursion up to and including the first resonance at k >= 2;
// returns that order, or 0 if none occurred through `order`
int solve_eps(const OkamotoN& n, Branch b, const FreeFn& free_value, int order, int prec,
              BranchSolution& sol) {
  static const OkamotoN d1{rat(1, 7), rat(2, 11), rat(-3, 13), rat(5, 17)};
  static const OkamotoN d2{rat(-2, 5), rat(1, 3), rat(3, 7), rat(1, 9)};
  Run A{make_ctx(n, d1, prec), {}}, B{make_ctx(n, d2, prec), {}};
  sol.coeffs.clear();
  sol.resonances.clear();
  sol.pivots.clear();
  seed_run(A, b);
  seed_run(B, b);
  // c1 is free when the seed denominator vanishes at eps = 0
  if (branch_denominator(n, b) == 0) {
    bool pole = (!A.c[1].is_zero() && A.c[1].valuation() < 0) || (!B.c[1].is_zero() && B.c[1].valuation() < 0);
    if (pole || lim0(A.c[1]) != lim0(B.c[1])) {
      auto v = free_value(1);
      if (!v) throw BoundaryError("degenerate branch " + to_string(b) + ": c1 needs a scheduled value");
      A.c[1] = B.c[1] = SeriesK::constant(*v, prec);
      sol.resonances.push_back({1, *v});
    }
  }
  sol.coeffs = {lim0(A.c[0]), lim0(A.c[1])};
  for (int k = 2; k <= order; ++k) {
    SeriesK ra, rb;
    Rational pivot;
    for (Run* run : {&A, &B}) {
      EPoly c = run->c;
      c.push_back(SeriesK::zero(prec));
      SeriesK r0 = residual_coeff_eps(c, run->ctx, k);
      c.back() = SeriesK::constant(1, prec);
      SeriesK r1 = residual_coeff_eps(c, run->ctx, k);
      c.back() = SeriesK::constant(2, prec);
      SeriesK r2 = residual_coeff_eps(c, run->ctx, k);
      SeriesK a, bb;
      if (k == 2) {
        // R_2(x) = x (a x + b): the root c2 = 0 is not the branch
        if (!r0.is_zero()) throw BoundaryError("order-2 equation has a nonzero constant term");
        SeriesK q1 = r1, q2 = Rational(1, 2) * r2;
        a = q2 - q1;
        bb = q1 - a;
      } else {
        if (!(r2 - Rational(2) * r1 + r0).is_zero())
          throw BoundaryError("order " + std::to_string(k) + " equation is not linear in c_k");
        a = r1 - r0;
        bb = r0;
      }
      if (run == &A) pivot = lim0(a);
      (run == &A ? ra : rb) = finite_ratio(bb, a, k);
    }
    sol.pivots.push_back(pivot);
    if (lim0(ra) == lim0(rb)) {
      A.c.push_back(ra);
      B.c.push_back(rb);
      sol.coeffs.push_back(lim0(ra));
      continue;
    }
    auto v = free_value(k);
    if (!v) throw BoundaryError("missing scheduled constant at resonance order " + std::to_string(k));
    sol.coeffs.push_back(*v);
    sol.resonances.push_back({k, *v});
    return k;
  }
  return 0;
}

Rational residual_at(const std::vector<Rational>& c, const OkamotoN& n, int j) {
  return okamoto_residual(SeriesK::from_t_coeffs(0, c, j + 2), n).coeff_t(j);
}

// phase 0: plain recursion at the given n; nullopt when some pivot vanishes
std::optional<BranchSolution> solve_direct(const OkamotoN& n, Branch b, int order) {
  BranchSeed seed = branch_seed(n, b);
  if (!seed.c1) return std::nullopt;
  BranchSolution sol;
  sol.coeffs = {seed.c0, *seed.c1};
  if (f0_value(n, seed.c0, *seed.c1) != 0 || f1_bracket(n, seed.c0, *seed.c1) != 0) return std::nullopt;
  for (int k = 2; k <= order; ++k) {
    std::vector<Rational> c = sol.coeffs;
    c.push_back(0);
    Rational r0 = residual_at(c, n, k);
    c.back() = 1;
    Rational r1 = residual_at(c, n, k);
    c.back() = 2;
    Rational r2 = residual_at(c, n, k);
    Rational a, bb;
    if (k == 2) {
      if (r0 != 0) return std::nullopt;
      a = r2 / 2 - r1;
      bb = r1 - a;
    } else {
      if (r2 - 2 * r1 + r0 != 0) return std::nullopt;
      a = r1 - r0;
      bb = r0;
    }
    if (a == 0) return std::nullopt;
    sol.pivots.push_back(a);
    sol.coeffs.push_back(-bb / a);
  }
  return sol;
}

// phase 2: after a free constant the equations fix c_k at a shifted order; c_k is
// taken from the lowest residual order it enters, which must be linear in c_k and
// independent of c_{k+1}, c_{k+2}
void continue_direct(const OkamotoN& n, BranchSolution& sol, const FreeFn& free_value, int order,
                     int verified) {
  auto eval = [&](int k, const Rational& x, const Rational& y1, const Rational& y2, int j) {
    std::vector<Rational> c = sol.coeffs;
    c.resize(static_cast<size_t>(k + 3), Rational(0));
    c[static_cast<size_t>(k)] = x;
    c[static_cast<size_t>(k + 1)] = y1;
    c[static_cast<size_t>(k + 2)] = y2;
    return residual_at(c, n, j);
  };
  auto depends_on_later = [&](int k, const Rational& x, int j) {
    Rational base = eval(k, x, 0, 0, j);
    for (int v = 1; v <= 4; ++v)
      if (eval(k, x, v, 0, j) != base || eval(k, x, 0, v, j) != base) return true;
    return false;
  };
  int span = 2 * order + 8;
  for (int k = static_cast<int>(sol.coeffs.size()); k <= order; ++k) {
    bool solved = false;
    for (int j = verified; j <= k + span; ++j) {
      Rational r0 = eval(k, 0, 0, 0, j), r1 = eval(k, 1, 0, 0, j), r2 = eval(k, 2, 0, 0, j);
      if (r0 == r1 && r1 == r2) {
        if (depends_on_later(k, 0, j))
          throw BoundaryError("order " + std::to_string(j) + " couples later coefficients before c_" +
                              std::to_string(k));
        if (r0 != 0)
          throw BoundaryError("no analytic solution on this branch: obstruction " + to_string(r0) +
                              " at t^" + std::to_string(j));
        verified = j + 1;
        continue;
      }
      Rational x;
      if (r2 - 2 * r1 + r0 == 0) {
        x = -r0 / (r1 - r0);
      } else {
        // degenerate member (e.g. a zero free constant): the equation is a polynomial
        // of degree <= 4 in c_k; accept it only with a single rational root
        std::vector<std::vector<Rational>> V;
        std::vector<Rational> rhs;
        for (int p = 0; p <= 4; ++p) {
          std::vector<Rational> row;
          for (int e = 0; e <= 4; ++e) row.push_back(pow_int(Rational(p), e));
          V.push_back(row);
          rhs.push_back(eval(k, p, 0, 0, j));
        }
        std::vector<Rational> poly = solve_linear(V, rhs).x;
        Rational probe = 0;
        for (int e = 4; e >= 0; --e) probe = probe * 7 + poly[static_cast<size_t>(e)];
        if (probe != eval(k, 7, 0, 0, j))
          throw BoundaryError("order " + std::to_string(j) + " equation has degree > 4 in c_" + std::to_string(k));
        auto roots = rational_roots(poly);
        if (!roots || roots->empty() || roots->front() != roots->back())
          throw BoundaryError("order " + std::to_string(j) + " does not fix c_" + std::to_string(k) +
                              " uniquely");
        x = roots->front();
      }
      if (depends_on_later(k, x, j))
        throw BoundaryError("order " + std::to_string(j) + " does not isolate c_" + std::to_string(k));
      sol.pivots.push_back(r1 - r0);
      sol.coeffs.push_back(x);
      verified = j + 1;
      solved = true;
      break;
    }
    if (solved) continue;
    auto v = free_value(k);
    if (!v) throw BoundaryError("missing scheduled constant at resonance order " + std::to_string(k));
    sol.coeffs.push_back(*v);
    sol.resonances.push_back({k, *v});
  }
}

BranchSolution solve_impl(const OkamotoN& n, Branch b, const FreeFn& free_value, int order) {
  if (order < 1) throw std::invalid_argument("solve_analytic: order must be >= 1");
  BranchSolution sol;
  if (auto d = solve_direct(n, b, order)) {
    sol = *d;
  } else {
    int stop = -1;
    for (int prec = 8; prec <= 256 && stop < 0; prec *= 2) {
      try {
        stop = solve_eps(n, b, free_value, order, prec, sol);
      } catch (const PrecisionLost&) {
      }
    }
    if (stop < 0) throw BoundaryError("eps precision exhausted");
    if (stop > 0 && stop < order) continue_direct(n, sol, free_value, order, stop + 1);
  }
  sol.branch = b;
  sol.n = n;
  sol.order = order;
  // the result must solve the equation at the given parameters
  SeriesK res = okamoto_residual(SeriesK::from_t_coeffs(0, sol.coeffs, order + 2), n);
  for (int k = 0; k <= order; ++k)
    if (res.coeff_t(k) != 0)
      throw BoundaryError("branch series fails the Okamoto equation at t^" + std::to_string(k));
  return sol;
}

}  // namespace

Rational branch_denominator(const OkamotoN& n, Branch b) {
  OkamotoN m = flipped(n, b);
  return m[0] + m[1] + m[2] + m[3];
}

BranchSeed branch_seed(const OkamotoN& n, Branch b) {
  // every closed form is the case-4 form on sign-flipped parameters, up to the overall
  // sign conventions of the printed list
  OkamotoN m = flipped(n, b);
  const Rational &a = m[0], &bb = m[1], &c = m[2], &d = m[3];
  BranchSeed s;
  s.c0 = (-a * bb - c * d - (a + bb) * (c + d)) / 2;
  Rational D = a + bb + c + d;
  if (D != 0) s.c1 = ((a + bb) * c * d + a * bb * (c + d)) / D;
  Rational den2 = D * D * (D + 1) * (D - 1);
  if (den2 != 0) s.c2 = (a + bb) * (a + c) * (a + d) * (bb + c) * (bb + d) * (c + d) / den2;
  Rational den3 = D * (D + 2) * (D - 2);
  if (s.c2 && den3 != 0) s.c3 = 2 * N3_case4(m) * *s.c2 / den3;
  return s;
}

Rational f0_value(const OkamotoN& n, const Rational& c0, const Rational& c1) {
  Rational e3 = 0;
  for (int i = 0; i < 4; ++i) {
    Rational p = 1;
    for (int j = 0; j < 4; ++j)
      if (j != i) p *= n[j] * n[j];
    e3 += p;
  }
  Rational P = prodn(n);
  return e3 - 4 * c0 * P + c1 * (e2sq(n) - 2 * P) + c1 * c1 * e1sq(n) - 4 * c0 * c1 * (c0 + c1);
}

Rational f1_bracket(const OkamotoN& n, const Rational& c0, const Rational& c1) {
  return 4 * c0 * c0 + 8 * c0 * c1 - 2 * c1 * e1sq(n) - e2sq(n) + 2 * prodn(n);
}

SeriesK BranchSolution::series() const { return SeriesK::from_t_coeffs(0, coeffs, order); }

BranchSolution solve_analytic(const OkamotoN& n, Branch b, const std::map<int, Rational>& freeSchedule,
                              int order) {
  return solve_impl(
      n, b,
      [&](int k) -> std::optional<Rational> {
        auto it = freeSchedule.find(k);
        if (it == freeSchedule.end()) return std::nullopt;
        return it->second;
      },
      order);
}

Branch natural_branch(const Correlation& c) {
  return c.regime == Regime::LowT ? Branch::B1 : Branch::B2;
}

SeriesK lambda_zero_member(const Correlation& c) {
  int ko = c.series.order();
  if (c.regime == Regime::LowT) return one_minus_t_pow(rat(1, 4), ko);
  if (c.series.is_zero()) throw std::invalid_argument("lambda_zero_member: zero correlation");
  int N = c.N, M = c.M;
  if (c.series.valuation() != N)
    throw std::invalid_argument("lambda_zero_member: unexpected leading power of k");
  Rational K1 = c.series.coeffs().front();
  SeriesK F, pre;
  if (!c.tilde) {
    F = hyp2f1_k(rat(N - M + 1, 2), rat(N + M + 1, 2), N + 1, ko);
    pre = one_minus_t_pow(rat(1, 4), ko);
  } else {
    F = hyp2f1_k(rat(N - M, 2), rat(N + M, 2), N + 1, ko);
    pre = one_minus_t_pow(rat(-1, 4), ko);
  }
  return (K1 * pre * F).shift(N).truncate(ko);
}

LambdaMatch match_lambda(const Correlation& c, const BranchSolution& sol) {
  HData hd = h_from_corr(c);
  if (hd.n != sol.n) throw BoundaryError("match_lambda: branch solution uses different Okamoto parameters");
  const SeriesK& h = hd.h;
  int order = std::min(sol.order, h.order() / 2);
  BranchSolution fitted = solve_impl(
      sol.n, sol.branch, [&](int k) -> std::optional<Rational> { return h.coeff_t(k); }, order);
  if (fitted.resonances.empty()) throw BoundaryError("match_lambda: no resonance through t^" + std::to_string(order));
  int r = fitted.resonances.front().order;
  for (int k = 0; k <= order; ++k) {
    if (fitted.coeffs[static_cast<size_t>(k)] != h.coeff_t(k)) {
      if (k < r)
        throw BoundaryError("series mismatch below the resonance order at t^" + std::to_string(k) +
                            " (wrong branch)");
      throw BoundaryError("series mismatch at t^" + std::to_string(k));
    }
  }
  LambdaMatch m;
  m.resonance_order = r;
  m.free_constant = h.coeff_t(r);
  m.lambda_zero = lambda_zero_member(c);
  Correlation z = c;
  z.series = m.lambda_zero;
  m.free_constant_zero = h_from_corr(z).h.coeff_t(r);
  // C = member * (1 + kappa t^r + ...)  =>  c_r - c_r(0) = -r kappa
  SeriesK ratio = (c.series / m.lambda_zero).as_t();
  for (int k = 1; k < r; ++k)
    if (ratio.coeff_t(k) != 0)
      throw BoundaryError("correlation departs from the lambda = 0 member below the resonance");
  m.bracket_coefficient = ratio.coeff_t(r);
  if (m.free_constant - m.free_constant_zero != -r * m.bracket_coefficient)
    throw BoundaryError("resonance constant and bracket coefficient disagree");
  return m;
}

}  // namespace ising
