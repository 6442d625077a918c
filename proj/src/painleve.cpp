#include "ising/painleve.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace ising {

namespace {

Rational parity_s(int M, int N) { return ((M + N) % 2 == 0) ? Rational(1) : Rational(0); }

Rational sq(int x) { return Rational(x) * x; }

SeriesK t_of(const SeriesK& like) { return SeriesK::t(like.order() + 4); }

struct Derivs {
  SeriesK y, y1, y2, t;
};

Derivs derivs(const SeriesK& y) {
  if (!y.even_support()) throw SeriesError("sigma series must be a series in t");
  SeriesK yt = y.as_t();
  if (yt.order() < 4) throw SeriesError("insufficient order: need at least two known t-orders");
  Derivs d;
  d.y = yt;
  d.y1 = series_deriv_t(yt);
  d.y2 = series_deriv_t(d.y1);
  d.t = t_of(yt);
  return d;
}

SeriesK to_t(const SeriesK& s) { return s.even_support() ? s.as_t() : s; }

}  // namespace

std::string to_string(SigmaVariant v) {
  switch (v) {
    case SigmaVariant::DiagLow: return "DiagLow";
    case SigmaVariant::DiagHigh: return "DiagHigh";
    case SigmaVariant::Low: return "Low";
    case SigmaVariant::HighEven: return "HighEven";
    case SigmaVariant::HighOdd: return "HighOdd";
  }
  return "?";
}

std::string to_string(OdeFamily f) {
  switch (f) {
    case OdeFamily::JMDiag: return "JMDiag";
    case OdeFamily::LowMN: return "LowMN";
    case OdeFamily::HighEvenMN: return "HighEvenMN";
    case OdeFamily::HighOddMN: return "HighOddMN";
  }
  return "?";
}

SeriesK tdlog_shifted(const SeriesK& c, const Rational& shift_t, const Rational& shift_c) {
  if (c.is_zero()) throw SeriesError("zero correlation has no sigma");
  SeriesK dl = series_dlog_dt(c);
  if (!dl.even_support()) throw SeriesError("dlog has odd k-support; not a t-series");
  SeriesK t = SeriesK::t(dl.order() + 8);
  SeriesK r = t * (t - Rational(1)) * dl.as_t() - shift_t * t - shift_c;
  return r.as_t();
}

SigmaSeries sigma_from_corr(const Correlation& c) {
  SigmaVariant v;
  if (c.regime == Regime::LowT)
    v = (c.M == c.N) ? SigmaVariant::DiagLow : SigmaVariant::Low;
  else if (c.tilde)
    v = SigmaVariant::HighOdd;
  else
    v = (c.M == c.N) ? SigmaVariant::DiagHigh : SigmaVariant::HighEven;
  return sigma_from_corr(c, v);
}

SigmaSeries sigma_from_corr(const Correlation& c, SigmaVariant v) {
  if (c.series.is_zero())
    throw std::invalid_argument("sigma_from_corr: correlation is identically zero");
  bool low = (v == SigmaVariant::DiagLow || v == SigmaVariant::Low);
  if (low != (c.regime == Regime::LowT))
    throw std::invalid_argument("sigma_from_corr: variant does not match the regime");
  if (v == SigmaVariant::HighOdd && !c.tilde)
    throw std::invalid_argument("sigma_from_corr: HighOdd needs the tilde correlation");
  if ((v == SigmaVariant::DiagLow || v == SigmaVariant::DiagHigh) && c.M != c.N)
    throw std::invalid_argument("sigma_from_corr: diagonal variant needs M == N");
  SigmaSeries s;
  s.variant = v;
  s.M = c.M;
  s.N = c.N;
  s.series = low ? tdlog_shifted(c.series, rat(1, 4), 0) : tdlog_shifted(c.series, 0, rat(1, 4));
  return s;
}

OdeSpec ode_for(const SigmaSeries& s) {
  switch (s.variant) {
    case SigmaVariant::DiagLow:
    case SigmaVariant::DiagHigh: return {OdeFamily::JMDiag, s.M, s.N};
    case SigmaVariant::Low: return {OdeFamily::LowMN, s.M, s.N};
    case SigmaVariant::HighEven: return {OdeFamily::HighEvenMN, s.M, s.N};
    case SigmaVariant::HighOdd: return {OdeFamily::HighOddMN, s.M, s.N};
  }
  return {};
}

CosgroveParams cosgrove_params_for(const OdeSpec& spec) {
  Rational M2 = sq(spec.M), N2 = sq(spec.N);
  CosgroveParams p;
  switch (spec.family) {
    case OdeFamily::JMDiag:
      p.c5 = -N2 / 4;
      p.c6 = (2 * N2 - 1) / 4;
      p.c7 = -N2 / 4;
      break;
    case OdeFamily::LowMN:
      p.c5 = -M2 / 4;
      p.c6 = (M2 + N2 - parity_s(spec.M, spec.N)) / 4;
      p.c7 = -N2 / 4;
      break;
    case OdeFamily::HighEvenMN: {
      Rational d = N2 - M2;
      p.c5 = -M2 / 4;
      p.c6 = (N2 + M2 - 1) / 4;
      p.c7 = -N2 / 4;
      p.c8 = -d / 16;
      p.c9 = -d / 16;
      p.c10 = -d * d / 64;
      break;
    }
    case OdeFamily::HighOddMN: {
      Rational d = N2 - M2;
      p.c5 = -M2 / 4;
      p.c6 = (N2 + M2 - 2) / 4;
      p.c7 = -N2 / 4;
      p.c8 = -(d - 1) / 16;
      p.c9 = -(d + 1) / 16;
      p.c10 = -d * d / 64 + (M2 + N2 - 1) / 32;
      break;
    }
  }
  return p;
}

SeriesK cosgrove_residual(const SeriesK& y, const CosgroveParams& p) {
  Derivs d = derivs(y);
  SeriesK X = d.t * d.y1 - d.y;
  SeriesK lead = d.t * (d.t - Rational(1)) * d.y2;
  SeriesK body = d.y1 * X * X - d.y1 * d.y1 * X + p.c5 * X * X + p.c6 * d.y1 * X +
                 p.c7 * d.y1 * d.y1 + p.c8 * X + p.c9 * d.y1 + p.c10;
  return to_t(lead * lead + Rational(4) * body);
}

SeriesK ode_residual(const SigmaSeries& s, const OdeSpec& spec) { return ode_residual(s.series, spec); }

// each family written out as printed, independently of cosgrove_params_for
SeriesK ode_residual(const SeriesK& sigma, const OdeSpec& spec) {
  Derivs d = derivs(sigma);
  const SeriesK& t = d.t;
  const SeriesK& s = d.y;
  const SeriesK& s1 = d.y1;
  SeriesK one = SeriesK::constant(1, t.order(), Var::T);
  SeriesK lead = t * (t - one) * d.y2;
  SeriesK X = t * s1 - s;            // t s' - s
  SeriesK W = (t - one) * s1 - s;    // (t-1) s' - s
  Rational M2 = sq(spec.M), N2 = sq(spec.N);
  SeriesK r;
  switch (spec.family) {
    case OdeFamily::JMDiag:
      r = lead * lead - N2 * W * W + Rational(4) * s1 * (W - rat(1, 4)) * X;
      break;
    case OdeFamily::LowMN:
      r = lead * lead + Rational(4) * s1 * X * W - M2 * X * X - N2 * s1 * s1 +
          (M2 + N2 - parity_s(spec.M, spec.N)) * s1 * X;
      break;
    case OdeFamily::HighEvenMN: {
      Rational dd = N2 - M2;
      r = lead * lead + Rational(4) * s1 * X * W - M2 * X * X + (N2 + M2 - 1) * s1 * X -
          N2 * s1 * s1 - (dd / 4) * X - (dd / 4) * s1 - dd * dd / 16;
      break;
    }
    case OdeFamily::HighOddMN: {
      Rational dd = N2 - M2;
      r = lead * lead + Rational(4) * s1 * X * W - M2 * X * X + (N2 + M2 - 2) * s1 * X -
          N2 * s1 * s1 - ((dd - 1) / 4) * X - ((dd + 1) / 4) * s1 - dd * dd / 16 +
          (M2 + N2 - 1) / 8;
      break;
    }
  }
  return to_t(r);
}

ResidualCheck check_residual(const SeriesK& r) {
  ResidualCheck c;
  int tord = r.order() >= 0 ? r.order() / 2 : -1;
  if (r.is_zero()) {
    c.vanishes = true;
    c.order_verified = tord;
    return c;
  }
  c.vanishes = false;
  int v = r.valuation();
  c.first_nonzero = v % 2 == 0 ? v / 2 : v;  // odd support stays in k units
  c.order_verified = (v % 2 == 0 ? v / 2 : (v - 1) / 2) - 1;
  std::ostringstream os;
  os << to_string(r.coeffs().front()) << (v % 2 == 0 ? "*t^" : "*k^") << c.first_nonzero;
  c.leading_term = os.str();
  return c;
}

std::string to_string(const OkamotoN& n) {
  std::string s = "(";
  for (size_t i = 0; i < 4; ++i) s += (i ? ", " : "") + to_string(n[i]);
  return s + ")";
}

SeriesK okamoto_residual(const SeriesK& h, const OkamotoN& n) {
  Derivs d = derivs(h);
  const SeriesK& t = d.t;
  Rational P = n[0] * n[1] * n[2] * n[3];
  SeriesK lead = t * (t - Rational(1)) * d.y2;
  SeriesK mid = d.y1 * (Rational(2) * d.y - (Rational(2) * t - Rational(1)) * d.y1) + P;
  SeriesK prod = d.y1 + n[0] * n[0];
  for (int i = 1; i < 4; ++i) prod = prod * (d.y1 + n[i] * n[i]);
  return to_t(d.y1 * lead * lead + mid * mid - prod);
}

bool okamoto_equivalent(const OkamotoN& a, const OkamotoN& b) {
  std::array<Rational, 4> sa, sb;
  for (int i = 0; i < 4; ++i) {
    sa[i] = a[i] * a[i];
    sb[i] = b[i] * b[i];
  }
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  return sa == sb && a[0] * a[1] * a[2] * a[3] == b[0] * b[1] * b[2] * b[3];
}

OkamotoN okamoto_canonical(const OkamotoN& n) {
  OkamotoN c;
  for (int i = 0; i < 4; ++i) c[i] = abs(n[i]);
  std::sort(c.begin(), c.end(), [](const Rational& x, const Rational& y) { return x > y; });
  if (n[0] * n[1] * n[2] * n[3] < 0) c[3] = -c[3];
  return c;
}

OkamotoN okamoto_low(int M, int N) {
  Rational s = parity_s(M, N);
  return {(N - s) / 2, (N + s) / 2, rat(M, 2), rat(-M, 2)};
}

OkamotoN okamoto_high_even(int M, int N) {
  return {rat(M - 1, 2), rat(M + 1, 2), rat(N, 2), rat(-N, 2)};
}

OkamotoN okamoto_high_odd(int M, int N) {
  return {rat(M - 1, 2), rat(M + 1, 2), rat(N + 1, 2), rat(-(N - 1), 2)};
}

HData h_from_corr(const Correlation& c) {
  if (c.M > c.N) throw std::invalid_argument("h_from_corr: out of scope (M > N)");
  HData d;
  Rational M2 = sq(c.M), N2 = sq(c.N);
  if (c.regime == Regime::LowT) {
    Rational s = parity_s(c.M, c.N);
    d.shift_t = (M2 + 1) / 4;
    d.shift_c = (N2 - M2 - s) / 8;
    d.n = okamoto_low(c.M, c.N);
  } else if ((c.M + c.N) % 2 == 0) {
    if (c.tilde) throw std::invalid_argument("h_from_corr: tilde only for M+N odd");
    d.shift_t = M2 / 4;
    d.shift_c = (N2 - M2 + 1) / 8;
    d.n = okamoto_high_even(c.M, c.N);
  } else {
    if (!c.tilde) throw std::invalid_argument("h_from_corr: HighT M+N odd needs the tilde correlation");
    d.shift_t = M2 / 4;
    d.shift_c = (N2 - M2) / 8;
    d.n = okamoto_high_odd(c.M, c.N);
  }
  d.h = tdlog_shifted(c.series, d.shift_t, d.shift_c);
  return d;
}

HData h_from_factor(const SeriesK& f, int i, int N) {
  if (N % 2 == 0) throw std::invalid_argument("h_from_factor: N must be odd");
  Rational N2 = sq(N);
  HData d;
  switch (i) {
    case 1: d.shift_t = (N2 + 3) / 16; d.shift_c = -(N2 + 3) / 32; break;
    case 2: d.shift_t = (N2 - 1) / 16; d.shift_c = -(N2 + 3) / 32; break;
    case 3: d.shift_t = (N2 - 1) / 16; d.shift_c = -(N2 - 5) / 32; break;
    case 4: d.shift_t = (N2 - 5) / 16; d.shift_c = -(N2 - 5) / 32; break;
    default: throw std::invalid_argument("h_from_factor: factor index must be 1..4");
  }
  d.n = {rat(N - 1, 4), rat(N + 1, 4), rat(-1, 2), 0};
  d.h = tdlog_shifted(f, d.shift_t, d.shift_c);
  return d;
}

FwBridge h_from_fw(int M, int N, Regime regime, int order) {
  if (regime != Regime::LowT)
    throw std::invalid_argument("h_from_fw: the tau-function bridge is stated for the low-T elements");
  FwBridge b;
  if ((M + N) % 2 == 0) {
    b.p = rat(M - N + 1, 2);
    b.pp = rat(M - N - 1, 2);
  } else {
    b.p = b.pp = rat(M - N, 2);
  }
  // eta = 0
  b.n = {(N - b.p + b.pp) / 2, (N + b.p - b.pp) / 2, (N + b.p + b.pp) / 2, (-N - b.p - b.pp) / 2};
  Rational a = (b.n[0] * b.n[1] + b.n[2] * b.n[3]) / 2;
  Rational e = (b.n[0] * b.n[1] - b.n[2] * b.n[3]) / 2;
  // h = t(t-1) dlog D_N + a (t-1) + e t - MN t / 2
  SeriesK D = fw_determinant(M, N, regime, order);
  b.h = tdlog_shifted(D, -(a + e - Rational(M * N, 2)), a);
  return b;
}

Rational ode_poly_at(const OdeSpec& spec, const Rational& t, const Rational& s, const Rational& s1,
                     const Rational& s2) {
  CosgroveParams p = cosgrove_params_for(spec);
  Rational X = t * s1 - s;
  Rational lead = t * (t - 1) * s2;
  return lead * lead + 4 * (s1 * X * X - s1 * s1 * X + p.c5 * X * X + p.c6 * s1 * X +
                            p.c7 * s1 * s1 + p.c8 * X + p.c9 * s1 + p.c10);
}

DualCheck dual_check(const OdeSpec& spec, unsigned seed, int points) {
  OdeSpec swapped = spec;
  std::swap(swapped.M, swapped.N);
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> num(-40, 40), den(1, 17);
  DualCheck out;
  out.consistent = true;
  auto draw = [&]() { return rat(num(rng), den(rng)); };
  while (out.points < points) {
    Rational t = draw(), s = draw(), s1 = draw(), s2 = draw();
    if (t == 0 || t == 1 || t == -1) continue;  // t^e must determine e
    Rational base = ode_poly_at(spec, t, s, s1, s2);
    if (base == 0) continue;
    Rational img = ode_poly_at(swapped, 1 / t, s / t, s - t * s1, t * t * t * s2);
    Rational ratio = img / base;
    std::optional<int> e;
    for (int k = -12; k <= 12 && !e; ++k)
      if (ratio == pow_int(t, k)) e = k;
    ++out.points;
    if (!e) {
      out.consistent = false;
    } else if (!out.exponent) {
      out.exponent = e;
    } else if (*out.exponent != *e) {
      out.consistent = false;
    }
  }
  if (!out.consistent) out.exponent.reset();
  return out;
}

bool KwReport::ok() const {
  return dual_consistent && (!invol_applicable || invol.vanishes);
}

KwReport kw_checks(int M, int N, int order, unsigned seed, int points) {
  KwReport r;
  r.M = M;
  r.N = N;
  r.order = order;
  r.invol_applicable = (M + N) % 2 == 0;
  if (r.invol_applicable) {
    // sigma to order+2 in t so the residual is known through t^order
    int korder = 2 * (order + 2);
    Correlation c = corr_fw(M, N, Regime::LowT, korder + 2 * N + 4);
    SeriesK sigma = tdlog_shifted(c.series, rat(1, 4), 0).truncate(korder);
    Rational d = (sq(N) - sq(M)) / 4;
    SeriesK t = SeriesK::t(korder + 4);
    SeriesK moved = (sigma + d * (t - Rational(1))).truncate(korder);
    r.invol = check_residual(ode_residual(moved, {OdeFamily::HighEvenMN, N, M}));
    if (r.invol.vanishes && r.invol.order_verified < order)
      r.notes.push_back("invol residual known only through t^" + std::to_string(r.invol.order_verified));
    if (r.invol.vanishes && r.invol.order_verified < order) r.invol.vanishes = false;
  } else {
    r.notes.push_back("invol check applies to M+N even only");
  }
  // the low family and both high families against their swaps
  r.dual_consistent = true;
  for (OdeFamily f : {OdeFamily::LowMN, OdeFamily::HighEvenMN, OdeFamily::HighOddMN}) {
    if (f == OdeFamily::HighEvenMN && (M + N) % 2 != 0) continue;
    if (f == OdeFamily::HighOddMN && (M + N) % 2 == 0) continue;
    DualCheck dc = dual_check({f, M, N}, seed, points);
    r.dual_points += dc.points;
    if (!dc.consistent) {
      r.dual_consistent = false;
      r.notes.push_back("dual check failed for " + to_string(f));
    } else if (!r.dual_exponent) {
      r.dual_exponent = dc.exponent;
    } else if (*r.dual_exponent != *dc.exponent) {
      r.notes.push_back("dual exponent differs between families");
    }
  }
  return r;
}

}  // namespace ising
