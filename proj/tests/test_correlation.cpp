#include "ising/correlation.hpp"
#include "ising/elliptic_poly.hpp"
#include "ising/hypergeometric.hpp"
#include "ising/identities.hpp"
#include "ising/matrix_elements.hpp"
#include "ising/recursion.hpp"

#include <doctest.h>

using namespace ising;

namespace {
SeriesK tpow(int p, int order) { return SeriesK::monomial(1, 2 * p, order); }
SeriesK Et(int o) { return elliptic_series(Elliptic::E, o); }
SeriesK Kt(int o) { return elliptic_series(Elliptic::K, o); }
}  // namespace

TEST_CASE("low-T C(0,1) and C(0,2) from the elliptic integrals") {
  const int o = 20, w = o + 4;
  CHECK(equal_through(corr_row(1, Regime::LowT, o).series, one_minus_t_pow(rat(1, 2), w) * Kt(w), o));
  SeriesK E = Et(w), K = Kt(w), omt = one_minus_t(w);
  SeriesK c02 = (E * E - Rational(2) * omt * E * K + omt * K * K) / tpow(1, w);
  CHECK(equal_through(corr_row(2, Regime::LowT, o).series, c02, o));
  CHECK(equal_through(corr_fw(0, 2, Regime::LowT, o).series, c02, o));
}

TEST_CASE("high-T C(0,2), tilde C(0,1) and the C(0,4) product of C+ and C-") {
  const int o = 24, w = o + 12;
  SeriesK E = Et(w), K = Kt(w), omt = one_minus_t(w), s = one_minus_t_pow(rat(1, 2), w);
  CHECK(equal_through(corr_row(2, Regime::HighT, o).series, (E * E - omt * K * K) / tpow(1, w), o));
  Correlation ct = corr_fw(0, 1, Regime::HighT, o, true);
  CHECK(ct.tilde);
  CHECK(equal_through(ct.series, (K - E) / SeriesK::k(w), o));
  SeriesK two_t = Rational(2) - tpow(1, w);
  SeriesK Cp = (two_t + Rational(3) * s) * E * E + s * omt * K * K - (Rational(2) * omt + Rational(2) * two_t * s) * E * K;
  SeriesK Cm = (two_t - Rational(3) * s) * E * E - s * omt * K * K - (Rational(2) * omt - Rational(2) * two_t * s) * E * K;
  SeriesK c04 = rat(16, 9) * Cp * Cm / tpow(4, w);
  CHECK(equal_through(corr_fw(0, 4, Regime::HighT, o).series, c04, o));
  CHECK(equal_through(corr_row(4, Regime::HighT, o).series, c04, o));
}

TEST_CASE("high-T row route: 2N x 2N Toeplitz equals FW for C(0,2), C(0,4), C(0,6)") {
  for (int N : {2, 4, 6}) CHECK(equal_through(corr_row(N, Regime::HighT, 18).series, corr_fw(0, N, Regime::HighT, 18).series, 18));
}

TEST_CASE("high-T C(M,N) vanishes for M+N odd unless the tilde form is asked for") {
  for (auto [M, N] : std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {0, 3}, {2, 3}}) {
    Correlation c = corr_fw(M, N, Regime::HighT, 20, false);
    CHECK(c.series.is_zero());
    CHECK(c.series.order() >= 20);
    CHECK_FALSE(corr_fw(M, N, Regime::HighT, 20, true).series.is_zero());
  }
  CHECK(corr_row(3, Regime::HighT, 20).series.is_zero());
}

TEST_CASE("diagonal route equals FW") {
  for (Regime r : {Regime::LowT, Regime::HighT})
    for (int N = 1; N <= 3; ++N) CHECK(equal_through(corr_diag(N, r, 16).series, corr_fw(N, N, r, 16).series, 16));
}

TEST_CASE("low-T FW correlation is the prefactor times D_N") {
  Correlation c = corr_fw(1, 3, Regime::LowT, 16);
  SeriesK pre = one_minus_t_pow(fw_prefactor_exponent(1, 3, Regime::LowT), 20);
  CHECK(equal_through(c.series, pre * fw_determinant(1, 3, Regime::LowT, 20), 16));
}

TEST_CASE("quadratic recursion") {
  RecursionResult r = corr_recursion_table(2, 3, 14);
  CHECK(r.all_residuals_vanish());
  for (int N = 1; N <= 3; ++N)
    for (int M = 0; M <= std::min(N, 2); ++M) {
      CHECK(equal_through(r.low.at(M, N).value.re, corr_fw(M, N, Regime::LowT, 14).series, 14));
      CHECK(equal_through(r.high.at(M, N).value.re, corr_fw(M, N, Regime::HighT, 14, false).series, 14));
    }
  // reflections
  CHECK(equal_through(r.low.at(-1, 2).value.re, r.low.at(1, 2).value.re, 14));
  // C_high(1,0) = -i C_low(0,1)
  const ComplexSeries& h10 = r.high.at(1, 0).value;
  CHECK(h10.re.is_zero());
  CHECK(equal_through(h10.im, -r.low.at(0, 1).value.re, 14));
}

TEST_CASE("fixture parsing") {
  Fixture f = parse_fixture(
      "name demo\ncorr low 0 2\nprefactor 1 -1 0\nfactor (1) E^2 K^0 ; (-2,2) E^1 K^1 ; (1,-1) E^0 K^2\n");
  CHECK(f.name == "demo");
  CHECK(f.N == 2);
  CHECK(f.poly.homogeneous());
  CHECK(equal_through(elliptic_poly_eval(f.poly, 16), corr_fw(0, 2, Regime::LowT, 16).series, 16));
  CHECK_THROWS(parse_fixture("name x\ncorr low 0 2\nfactor (1 E^2\n"));
  CHECK_THROWS(parse_fixture("corr sideways 0 2\n"));
  // a pole left at t = 0 is refused
  Fixture bad = parse_fixture("name p\ncorr low 0 1\nprefactor 1 -1 0\nfactor (1) E^0 K^1\n");
  CHECK_THROWS(elliptic_poly_eval(bad.poly, 10));
}

TEST_CASE("fixture corpus matches the computed routes") {
  auto all = load_fixture_dir(default_fixture_dir());
  CHECK(all.size() == 14);
  for (const auto& f : all) {
    if (f.M > f.N) continue;
    INFO(f.name);
    CHECK(equal_through(elliptic_poly_eval(f.poly, 16), corr_fw(f.M, f.N, f.regime, 16, true).series, 16));
  }
}

TEST_CASE("C(0,5) equals the constant times the four displayed factors") {
  CHECK(equal_through(elliptic_poly_eval(c05_product(), 20), corr_row(5, Regime::LowT, 20).series, 20));
}

TEST_CASE("alpha form of high-T C(0,2)") {
  SeriesK a = series_substitute(corr_row(2, Regime::HighT, 16).series, k_of_alpha(16), 16);
  CHECK(a[2] == rat(1, 2));
  CHECK(a[4] == 0);
  CHECK(a[6] == rat(-1, 16));
  CHECK(a[10] == rat(-1, 64));
  CHECK(a[14] == rat(-13, 2048));
}
