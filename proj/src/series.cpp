#include "ising/series.hpp"

#include <algorithm>
#include <sstream>

namespace ising {

namespace {

void check_var(const SeriesK& a, const SeriesK& b, const char* op) {
  if (a.var() != b.var())
    throw SeriesError(std::string(op) + ": variable tag mismatch (k vs t)");
}

int floor_div2(int x) { return x >= 0 ? x / 2 : -((-x + 1) / 2); }

}  // namespace

SeriesK SeriesK::zero(int order, Var v) {
  SeriesK s;
  s.ord_ = order;
  s.val_ = order + 1;
  s.var_ = v;
  s.normalize();
  return s;
}

SeriesK SeriesK::constant(const Rational& c, int order, Var v) { return monomial(c, 0, order, v); }

SeriesK SeriesK::monomial(const Rational& c, int power, int order, Var v) {
  if (power > order || c == 0) return zero(order, v);
  std::vector<Rational> cs(static_cast<size_t>(order - power + 1));
  cs[0] = c;
  return from_coeffs(power, std::move(cs), order, v);
}

SeriesK SeriesK::from_coeffs(int valuation, std::vector<Rational> coeffs, int order, Var v) {
  SeriesK s;
  s.val_ = valuation;
  s.ord_ = order;
  s.var_ = v;
  if (valuation > order) {
    coeffs.clear();
  } else {
    coeffs.resize(static_cast<size_t>(order - valuation + 1));
  }
  s.c_ = std::move(coeffs);
  if (s.c_.empty()) s.val_ = order + 1;
  s.normalize();
  return s;
}

SeriesK SeriesK::from_t_coeffs(int tval, const std::vector<Rational>& coeffs, int torder) {
  int kval = 2 * tval;
  int kord = 2 * torder + 1;
  std::vector<Rational> cs(kord >= kval ? static_cast<size_t>(kord - kval + 1) : 0);
  for (size_t i = 0; i < coeffs.size(); ++i) {
    size_t idx = 2 * i;
    if (idx < cs.size()) cs[idx] = coeffs[i];
  }
  return from_coeffs(kval, std::move(cs), kord, Var::T);
}

void SeriesK::normalize() {
  if (var_ == Var::T && ord_ % 2 == 0) {
    // the next power is odd and therefore known to vanish
    ++ord_;
    if (!c_.empty()) c_.emplace_back(0);
  }
  size_t lead = 0;
  while (lead < c_.size() && c_[lead] == 0) ++lead;
  if (lead == c_.size()) {
    c_.clear();
    val_ = ord_ + 1;
    return;
  }
  if (lead > 0) {
    c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
    val_ += static_cast<int>(lead);
  }
}

Rational SeriesK::operator[](int p) const {
  if (p > ord_) throw SeriesError("coefficient requested beyond known order");
  if (p < val_) return 0;
  return c_[static_cast<size_t>(p - val_)];
}

bool SeriesK::even_support() const {
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0 && ((val_ + static_cast<int>(i)) % 2 != 0)) return false;
  return true;
}

bool SeriesK::odd_support() const {
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0 && ((val_ + static_cast<int>(i)) % 2 == 0)) return false;
  return true;
}

SeriesK SeriesK::with_var(Var v) const {
  if (v == Var::T && !even_support())
    throw SeriesError("series has odd powers of k; no t-representation");
  SeriesK s = *this;
  s.var_ = v;
  s.normalize();
  return s;
}

SeriesK SeriesK::truncate(int order) const {
  if (order >= ord_) return *this;
  SeriesK s = *this;
  s.ord_ = order;
  if (s.val_ > order) {
    s.c_.clear();
    s.val_ = order + 1;
  } else {
    s.c_.resize(static_cast<size_t>(order - s.val_ + 1));
  }
  s.normalize();
  return s;
}

SeriesK SeriesK::shift(int sh) const {
  SeriesK s = *this;
  s.val_ += sh;
  s.ord_ += sh;
  if (sh % 2 != 0) s.var_ = Var::K;
  s.normalize();
  return s;
}

SeriesK SeriesK::negate_k() const {
  SeriesK s = *this;
  for (size_t i = 0; i < s.c_.size(); ++i)
    if ((val_ + static_cast<int>(i)) % 2 != 0) s.c_[i] = -s.c_[i];
  return s;
}

int SeriesK::t_valuation() const {
  if (!even_support()) throw SeriesError("t-view of a series with odd support");
  return is_zero() ? t_order() + 1 : val_ / 2;
}

int SeriesK::t_order() const { return floor_div2(ord_); }

SeriesK operator+(const SeriesK& a, const SeriesK& b) {
  check_var(a, b, "series_add");
  int ord = std::min(a.ord_, b.ord_);
  int val = std::min(a.val_, b.val_);
  if (val > ord) return SeriesK::zero(ord, a.var_);
  std::vector<Rational> cs(static_cast<size_t>(ord - val + 1));
  for (int p = val; p <= ord; ++p) {
    Rational& c = cs[static_cast<size_t>(p - val)];
    if (p >= a.val_) c += a.c_[static_cast<size_t>(p - a.val_)];
    if (p >= b.val_) c += b.c_[static_cast<size_t>(p - b.val_)];
  }
  return SeriesK::from_coeffs(val, std::move(cs), ord, a.var_);
}

SeriesK SeriesK::operator-() const {
  SeriesK s = *this;
  for (auto& c : s.c_) c = -c;
  return s;
}

SeriesK operator-(const SeriesK& a, const SeriesK& b) { return a + (-b); }

SeriesK operator*(const SeriesK& a, const SeriesK& b) {
  check_var(a, b, "series_mul");
  int ord = std::min(a.ord_ + b.val_, b.ord_ + a.val_);
  if (a.is_zero() || b.is_zero()) return SeriesK::zero(ord, a.var_);
  int val = a.val_ + b.val_;
  if (val > ord) return SeriesK::zero(ord, a.var_);
  size_t n = static_cast<size_t>(ord - val + 1);
  std::vector<Rational> cs(n);
  size_t na = a.c_.size(), nb = b.c_.size();
  Rational tmp;
  for (size_t i = 0; i < std::min(n, na); ++i) {
    if (a.c_[i] == 0) continue;
    size_t lim = std::min(nb, n - i);
    for (size_t j = 0; j < lim; ++j) {
      if (b.c_[j] == 0) continue;
      mpq_mul(tmp.get_mpq_t(), a.c_[i].get_mpq_t(), b.c_[j].get_mpq_t());
      cs[i + j] += tmp;
    }
  }
  return SeriesK::from_coeffs(val, std::move(cs), ord, a.var_);
}

SeriesK operator/(const SeriesK& a, const SeriesK& b) {
  check_var(a, b, "series_div");
  if (b.is_zero()) throw SeriesError("series_div: division by a series that is zero to its order");
  int val = a.val_ - b.val_;
  int rel = std::min(a.ord_ - a.val_, b.ord_ - b.val_);
  int ord = val + rel;
  if (a.is_zero()) return SeriesK::zero(a.ord_ - b.val_, a.var_);
  size_t n = static_cast<size_t>(rel + 1);
  std::vector<Rational> q(n);
  Rational inv = 1 / b.c_[0], acc, tmp;
  size_t nb = b.c_.size();
  for (size_t i = 0; i < n; ++i) {
    acc = a.c_[i];
    for (size_t j = 1; j <= std::min(i, nb - 1); ++j) {
      if (b.c_[j] == 0 || q[i - j] == 0) continue;
      mpq_mul(tmp.get_mpq_t(), b.c_[j].get_mpq_t(), q[i - j].get_mpq_t());
      acc -= tmp;
    }
    q[i] = acc * inv;
  }
  return SeriesK::from_coeffs(val, std::move(q), ord, a.var_);
}

SeriesK operator*(const Rational& c, const SeriesK& a) {
  if (c == 0) return SeriesK::zero(a.ord_, a.var_);
  SeriesK s = a;
  for (auto& x : s.c_) x *= c;
  return s;
}

SeriesK operator+(const SeriesK& a, const Rational& c) {
  if (a.ord_ < 0 || c == 0) return a;
  return a + SeriesK::constant(c, a.ord_, a.var_);
}

bool operator==(const SeriesK& a, const SeriesK& b) {
  return a.var_ == b.var_ && a.val_ == b.val_ && a.ord_ == b.ord_ && a.c_ == b.c_;
}

bool SeriesK::agrees_with(const SeriesK& b) const {
  int ord = std::min(ord_, b.ord_);
  int lo = std::min(val_, b.val_);
  for (int p = lo; p <= ord; ++p)
    if ((*this)[p] != b[p]) return false;
  return true;
}

std::string SeriesK::to_string(bool in_t) const {
  std::ostringstream os;
  bool first = true;
  const char* sym = in_t ? "t" : "k";
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    int p = val_ + static_cast<int>(i);
    if (in_t) p /= 2;
    Rational c = c_[i];
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << "-";
    Rational ac = abs(c);
    if (p == 0) {
      os << ising::to_string(ac);
    } else {
      if (ac != 1) os << ising::to_string(ac) << "*";
      os << sym;
      if (p != 1) os << "^" << p;
    }
    first = false;
  }
  if (first) os << "0";
  int o = in_t ? t_order() + 1 : ord_ + 1;
  os << " + O(" << sym << "^" << o << ")";
  return os.str();
}

SeriesK series_add(const SeriesK& a, const SeriesK& b) { return a + b; }
SeriesK series_mul(const SeriesK& a, const SeriesK& b) { return a * b; }
SeriesK series_div(const SeriesK& a, const SeriesK& b) { return a / b; }

SeriesK series_pow_rational(const SeriesK& a, const Rational& e) {
  if (e == 0) return SeriesK::constant(1, a.order() - a.valuation(), a.var());
  if (a.is_zero()) throw SeriesError("series_pow_rational: zero base");
  Rational ve = e * a.valuation();
  if (!is_integer(ve)) throw SeriesError("series_pow_rational: fractional resulting valuation");
  const Rational& lead = a.coeffs()[0];
  Rational lead_pow;
  if (lead == 1) {
    lead_pow = 1;
  } else if (is_integer(e)) {
    lead_pow = pow_int(lead, static_cast<int>(to_long(e)));
  } else {
    auto r = rational_root(lead, e.get_den().get_ui());
    if (!r) throw SeriesError("series_pow_rational: leading coefficient has no rational power");
    lead_pow = pow_int(*r, static_cast<int>(e.get_num().get_si()));
  }
  int rel = a.order() - a.valuation();
  const auto& u = a.coeffs();
  Rational inv = 1 / lead;
  std::vector<Rational> un(u.size());
  for (size_t i = 0; i < u.size(); ++i) un[i] = u[i] * inv;
  size_t n = static_cast<size_t>(rel + 1);
  std::vector<Rational> f(n);
  f[0] = 1;
  Rational acc;
  for (size_t m = 1; m < n; ++m) {
    acc = 0;
    for (size_t j = 1; j <= m; ++j) {
      if (un[j] == 0) continue;
      acc += (e * Rational(static_cast<long>(j)) - Rational(static_cast<long>(m - j))) * un[j] * f[m - j];
    }
    f[m] = acc / Rational(static_cast<long>(m));
  }
  for (auto& x : f) x *= lead_pow;
  int val = static_cast<int>(to_long(ve));
  Var v = a.var();
  if (v == Var::T && val % 2 != 0) v = Var::K;
  return SeriesK::from_coeffs(val, std::move(f), val + rel, v);
}

SeriesK series_pow_int(const SeriesK& a, long e) {
  if (e < 0) {
    SeriesK p = series_pow_int(a, -e);
    return SeriesK::constant(1, p.order() - p.valuation(), p.var()) / p;
  }
  SeriesK result = SeriesK::constant(1, a.is_zero() ? a.order() : a.order() - a.valuation(), a.var());
  if (e == 0) return result;
  SeriesK base = a;
  bool have = false;
  while (e > 0) {
    if (e & 1) {
      result = have ? result * base : base;
      have = true;
    }
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

SeriesK series_sqrt(const SeriesK& a) { return series_pow_rational(a, Rational(1, 2)); }

SeriesK series_deriv_k(const SeriesK& a) {
  int val = a.valuation();
  const auto& c = a.coeffs();
  std::vector<Rational> d(c.size());
  for (size_t i = 0; i < c.size(); ++i) d[i] = c[i] * (val + static_cast<int>(i));
  if (a.is_zero()) return SeriesK::zero(a.order() - 1);
  return SeriesK::from_coeffs(val - 1, std::move(d), a.order() - 1, Var::K);
}

SeriesK series_deriv_t(const SeriesK& a) {
  SeriesK d = Rational(1, 2) * series_deriv_k(a.as_k()).shift(-1);
  if (a.var() == Var::T && d.even_support()) return d.as_t();
  return d;
}

SeriesK series_dlog_dt(const SeriesK& a) {
  if (a.is_zero()) throw SeriesError("series_dlog_dt: identically zero input");
  SeriesK ak = a.as_k();
  SeriesK r = Rational(1, 2) * (series_deriv_k(ak) / ak).shift(-1);
  if (r.even_support()) return r.as_t();
  return r;
}

SeriesK series_compose(const std::vector<Rational>& f, const SeriesK& g, int order) {
  if (!g.is_zero() && g.valuation() < 1) throw SeriesError("series_compose: inner series must vanish at 0");
  int vg = g.is_zero() ? g.order() + 1 : g.valuation();
  int m = std::min<int>(static_cast<int>(f.size()) - 1, vg > 0 ? order / vg : 0);
  SeriesK r = SeriesK::constant(m >= 0 ? f[static_cast<size_t>(m)] : Rational(0), order, g.var());
  for (int j = m - 1; j >= 0; --j) r = r * g + f[static_cast<size_t>(j)];
  return r.truncate(order);
}

SeriesK series_substitute(const SeriesK& a, const SeriesK& g, int order) {
  if (g.is_zero() || g.valuation() < 1) throw SeriesError("series_substitute: need valuation >= 1");
  int vg = g.valuation();
  if (a.is_zero()) return SeriesK::zero(std::min(order, (a.order() + 1) * vg - 1), g.var());
  int v = a.valuation(), rel = a.order() - a.valuation();
  int capP = std::min(order - v * vg, (rel + 1) * vg - 1);
  SeriesK P = series_compose(a.coeffs(), g, capP);
  if (v == 0) return P.truncate(order);
  return (series_pow_int(g, v) * P).truncate(order);
}

SeriesK compute_to_order(int target, const std::function<SeriesK(int)>& build, int pad, int max_pad) {
  for (int p = pad; p <= max_pad; p = p * 2) {
    SeriesK r = build(target + p);
    if (r.order() >= target) return r.truncate(target);
  }
  throw SeriesError("requested order unattainable within padding budget");
}

}  // namespace ising
