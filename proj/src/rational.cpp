#include "ising/rational.hpp"

#include <stdexcept>

namespace ising {

Rational parse_rational(const std::string& s) {
  Rational r;
  if (s.empty() || r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  r.canonicalize();
  return r;
}

Rational pochhammer(const Rational& a, int n) {
  if (n < 0) throw std::invalid_argument("pochhammer: negative index");
  Rational r = 1;
  for (int i = 0; i < n; ++i) r *= a + i;
  return r;
}

Rational factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(f);
}

Rational binomial(const Rational& a, int n) {
  if (n < 0) return 0;
  Rational r = 1;
  for (int i = 0; i < n; ++i) r *= (a - i) / Rational(i + 1);
  return r;
}

Rational pow_int(const Rational& x, int e) {
  Rational r;
  if (e >= 0) {
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), x.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(den.get_mpz_t(), x.get_den_mpz_t(), static_cast<unsigned long>(e));
    r = Rational(num, den);
    r.canonicalize();
    return r;
  }
  if (x == 0) throw std::domain_error("pow_int: zero to negative power");
  return 1 / pow_int(x, -e);
}

std::optional<Rational> rational_root(const Rational& x, unsigned long n) {
  if (n == 0) return std::nullopt;
  if (n == 1) return x;
  bool neg = sgn(x) < 0;
  if (neg && n % 2 == 0) return std::nullopt;
  Integer num = abs(x.get_num()), den = x.get_den(), rn, rd;
  if (!mpz_root(rn.get_mpz_t(), num.get_mpz_t(), n)) return std::nullopt;
  if (!mpz_root(rd.get_mpz_t(), den.get_mpz_t(), n)) return std::nullopt;
  Rational r(rn, rd);
  r.canonicalize();
  if (neg) r = -r;
  return r;
}

}  // namespace ising
