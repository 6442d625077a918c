#ifndef ISING_SERIES_HPP
#define ISING_SERIES_HPP

#include "ising/rational.hpp"

#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace ising {

enum class Var { K, T };

class SeriesError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Truncated Laurent series in k.  coeffs[i] multiplies k^(valuation+i), and
// the value is known modulo k^(order+1).  The zero series is stored with no
// coefficients and valuation = order+1.
class SeriesK {
 public:
  SeriesK() : val_(1), ord_(0), var_(Var::K) {}

  static SeriesK zero(int order, Var v = Var::K);
  static SeriesK constant(const Rational& c, int order, Var v = Var::K);
  // c * k^power, exact to `order`
  static SeriesK monomial(const Rational& c, int power, int order, Var v = Var::K);
  // coefficient list starting at k^valuation
  static SeriesK from_coeffs(int valuation, std::vector<Rational> coeffs, int order,
                             Var v = Var::K);
  // coefficient list in t starting at t^tval, exact modulo t^(torder+1)
  static SeriesK from_t_coeffs(int tval, const std::vector<Rational>& coeffs, int torder);
  static SeriesK k(int order) { return monomial(1, 1, order); }
  static SeriesK t(int order) { return monomial(1, 2, order, Var::T); }

  int valuation() const { return val_; }
  int order() const { return ord_; }
  Var var() const { return var_; }
  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }

  // coefficient of k^p; throws if p > order
  Rational operator[](int p) const;
  Rational coeff_t(int p) const { return (*this)[2 * p]; }

  bool even_support() const;
  bool odd_support() const;

  SeriesK with_var(Var v) const;
  SeriesK as_k() const { return with_var(Var::K); }
  SeriesK as_t() const { return with_var(Var::T); }
  SeriesK truncate(int order) const;
  // multiply by k^s
  SeriesK shift(int s) const;
  // f(k) -> f(-k)
  SeriesK negate_k() const;
  // t-view valuation/order (requires even support)
  int t_valuation() const;
  int t_order() const;

  friend SeriesK operator+(const SeriesK& a, const SeriesK& b);
  friend SeriesK operator-(const SeriesK& a, const SeriesK& b);
  friend SeriesK operator*(const SeriesK& a, const SeriesK& b);
  friend SeriesK operator/(const SeriesK& a, const SeriesK& b);
  SeriesK operator-() const;
  SeriesK& operator+=(const SeriesK& b) { return *this = *this + b; }
  SeriesK& operator-=(const SeriesK& b) { return *this = *this - b; }
  SeriesK& operator*=(const SeriesK& b) { return *this = *this * b; }
  friend SeriesK operator*(const Rational& c, const SeriesK& a);
  friend SeriesK operator*(const SeriesK& a, const Rational& c) { return c * a; }
  friend SeriesK operator+(const SeriesK& a, const Rational& c);
  friend SeriesK operator+(const Rational& c, const SeriesK& a) { return a + c; }
  friend SeriesK operator-(const SeriesK& a, const Rational& c) { return a + Rational(-c); }
  friend SeriesK operator-(const Rational& c, const SeriesK& a) { return (-a) + c; }

  // identical valuation/order/coefficients
  friend bool operator==(const SeriesK& a, const SeriesK& b);
  // equal on the common known range, ignoring var tags
  bool agrees_with(const SeriesK& b) const;

  std::string to_string(bool in_t = false) const;

 private:
  void normalize();
  int val_;
  int ord_;
  std::vector<Rational> c_;
  Var var_;
};

SeriesK series_add(const SeriesK& a, const SeriesK& b);
SeriesK series_mul(const SeriesK& a, const SeriesK& b);
SeriesK series_div(const SeriesK& a, const SeriesK& b);
SeriesK series_pow_rational(const SeriesK& a, const Rational& e);
SeriesK series_pow_int(const SeriesK& a, long e);
SeriesK series_sqrt(const SeriesK& a);
// d/dk and d/dt = (1/(2k)) d/dk
SeriesK series_deriv_k(const SeriesK& a);
SeriesK series_deriv_t(const SeriesK& a);
SeriesK series_dlog_dt(const SeriesK& a);
// f(g) for f given by its coefficients in powers of z; g must have valuation >= 1
SeriesK series_compose(const std::vector<Rational>& f, const SeriesK& g, int order);
// substitute k -> g(x) where g has valuation >= 1; result is in the new variable
SeriesK series_substitute(const SeriesK& a, const SeriesK& g, int order);

// Recompute `build(work)` with growing working order until the result is
// known through `target`; the result is truncated to `target`.
SeriesK compute_to_order(int target, const std::function<SeriesK(int)>& build, int pad = 4,
                         int max_pad = 64);

}  // namespace ising

#endif
