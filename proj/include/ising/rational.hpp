#ifndef ISING_RATIONAL_HPP
#define ISING_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace ising {

// mpq_class keeps values canonical (lowest terms, positive denominator)
// as long as every constructor path calls canonicalize().
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// accepts "p", "-p", "p/q"
Rational parse_rational(const std::string& s);

// (a)_n rising factorial
Rational pochhammer(const Rational& a, int n);

Rational factorial(int n);

Rational binomial(const Rational& a, int n);

Rational pow_int(const Rational& x, int e);

// exact rational root if one exists
std::optional<Rational> rational_root(const Rational& x, unsigned long n);

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline long to_long(const Rational& r) { return r.get_num().get_si(); }

}  // namespace ising

#endif
