#include "ising/hypergeometric.hpp"
#include "ising/identities.hpp"
#include "ising/matrix_elements.hpp"

#include <doctest.h>

using namespace ising;

namespace {
// (binom(2n,n)/4^n)^2, the 2F1(1/2,1/2;1) coefficient written independently
Rational central_sq(int n) {
  Rational b = 1;
  for (int i = 1; i <= n; ++i) b = b * (n + i) / i;
  Rational r = b / pow_int(Rational(4), n);
  return r * r;
}
}  // namespace

TEST_CASE("2F1 coefficients") {
  auto c = hyp2f1_coeffs(Hyp2F1Spec(rat(1, 2), rat(1, 2), 1), 10);
  for (int n = 0; n <= 10; ++n) CHECK(c[static_cast<size_t>(n)] == central_sq(n));
  // terminating case: F(-2, b; c; t) is a quadratic
  auto q = hyp2f1_coeffs(Hyp2F1Spec(-2, rat(3, 2), rat(5, 2)), 6);
  CHECK(q[1] == rat(-2 * 3, 5));
  CHECK(q[3] == 0);
  SeriesK s = hyp2f1_series(Hyp2F1Spec(1, 1, 2), 8);  // -log(1-t)/t
  for (int n = 0; n <= 8; ++n) CHECK(s.coeff_t(n) == rat(1, n + 1));
  CHECK(hyp2f1_k(rat(1, 2), rat(1, 2), 1, 12).coeff_t(3) == central_sq(3));
}

TEST_CASE("normalized elliptic integrals") {
  SeriesK K = elliptic_series(Elliptic::K, 20), E = elliptic_series(Elliptic::E, 20);
  for (int n = 0; n <= 10; ++n) {
    CHECK(K.coeff_t(n) == central_sq(n));
    CHECK(E.coeff_t(n) == -central_sq(n) / (2 * n - 1));
  }
  // Pi(k^2, k) = E/(1-k^2)
  SeriesK x = SeriesK::monomial(1, 2, 20);
  CHECK(equal_through(elliptic_pi_series(x, 20), E / one_minus_t(20), 20));
}

TEST_CASE("(1-t)^e") {
  SeriesK h = one_minus_t_pow(rat(1, 2), 16);
  CHECK(equal_through(h * h, one_minus_t(16), 16));
  CHECK(one_minus_t_pow(rat(-1, 4), 8).coeff_t(1) == rat(1, 4));
}

TEST_CASE("alpha and k are inverse substitutions") {
  SeriesK a = alpha_of_k(15);
  CHECK(a[1] == rat(1, 2));
  SeriesK back = series_substitute(a, k_of_alpha(15), 15);
  CHECK(equal_through(back, SeriesK::k(15), 15));
}

TEST_CASE("row element a_0 = sqrt(1-k^2) K") {
  SeriesK a0 = row_low_element(0, 8);
  CHECK(a0[0] == 1);
  CHECK(a0[2] == rat(-1, 4));
  CHECK(a0[4] == rat(-7, 64));
  SeriesK direct = one_minus_t_pow(rat(1, 2), 12) * elliptic_series(Elliptic::K, 12);
  CHECK(equal_through(row_low_element(0, 12), direct, 12));
}

TEST_CASE("low-T row symmetry a_{-n}(k) = a_n(-k)") {
  for (int n = 1; n <= 5; ++n) CHECK(equal_through(row_low_element(-n, 14), row_low_element(n, 14).negate_k(), 14));
}

TEST_CASE("eta = 0 closed forms against the Fourier sum") {
  for (auto [p, pp] : std::vector<std::pair<Rational, Rational>>{{rat(1, 2), rat(-1, 2)}, {rat(3, 2), rat(1, 2)}, {1, 0}}) {
    for (int m = -3; m <= 3; ++m) {
      SeriesK closed = matrix_element(MatrixElementFamily::general(p, pp), m, 14);
      SeriesK fourier = general_fw_element_fourier(p, pp, -m, 14);
      if (m % 2 != 0) fourier = -fourier;
      CHECK(equal_through(closed, fourier, 14));
    }
  }
}

TEST_CASE("identity suite") {
  IdentityReport r = verify_hypergeometric_identities(16);
  CHECK(r.checks.size() > 50);
  for (const auto& c : r.checks) {
    INFO(c.group << ": " << c.name);
    CHECK(c.holds);
    CHECK(c.order >= 16);
  }
}
