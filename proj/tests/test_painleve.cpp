#include "ising/boundary.hpp"
#include "ising/elliptic_poly.hpp"
#include "ising/painleve.hpp"

#include <doctest.h>

using namespace ising;

namespace {
Correlation fw(int M, int N, Regime r, int torder) {
  bool tilde = r == Regime::HighT && (M + N) % 2 == 1;
  return corr_fw(M, N, r, 2 * torder + 2 * N + 8, tilde);
}
}  // namespace

TEST_CASE("sigma of the diagonal correlations") {
  SigmaSeries lo = sigma_from_corr(fw(1, 1, Regime::LowT, 12));
  CHECK(lo.variant == SigmaVariant::DiagLow);
  CHECK(lo.series.coeff_t(0) == 0);
  // high T: sigma(0) = -N/2 - 1/4
  SigmaSeries hi = sigma_from_corr(fw(1, 1, Regime::HighT, 12));
  CHECK(hi.variant == SigmaVariant::DiagHigh);
  CHECK(hi.series.coeff_t(0) == rat(-3, 4));
  CHECK(sigma_from_corr(fw(2, 2, Regime::HighT, 12)).series.coeff_t(0) == rat(-5, 4));
  for (const auto& s : {lo, hi}) CHECK(check_residual(ode_residual(s, ode_for(s))).order_verified >= 12);
}

TEST_CASE("family equations vanish on the computed sigma") {
  for (int N = 1; N <= 4; ++N)
    for (int M = 0; M <= N; ++M)
      for (Regime r : {Regime::LowT, Regime::HighT}) {
        SigmaSeries s = sigma_from_corr(fw(M, N, r, 16));
        ResidualCheck rc = check_residual(ode_residual(s, ode_for(s)));
        INFO(to_string(r) << " " << M << "," << N);
        CHECK(rc.vanishes);
        CHECK(rc.order_verified >= 16);
        // literal equation and its Cosgrove parameters agree
        CHECK(check_residual(cosgrove_residual(s.series, cosgrove_params_for(ode_for(s)))).vanishes);
      }
}

TEST_CASE("the wrong family leaves a residual") {
  SigmaSeries s = sigma_from_corr(fw(1, 3, Regime::LowT, 12));
  CHECK_FALSE(check_residual(ode_residual(s.series, {OdeFamily::LowMN, 0, 3})).vanishes);
  CHECK_FALSE(check_residual(ode_residual(s.series, {OdeFamily::HighEvenMN, 1, 3})).vanishes);
}

TEST_CASE("Okamoto parameters of the three families") {
  CHECK(okamoto_low(0, 1) == OkamotoN{rat(1, 2), rat(1, 2), 0, 0});
  CHECK(okamoto_high_even(0, 2) == OkamotoN{rat(-1, 2), rat(1, 2), 1, -1});
  CHECK(okamoto_high_odd(1, 2) == OkamotoN{0, 1, rat(3, 2), rat(-1, 2)});
}

TEST_CASE("Okamoto class: permutations and even sign changes") {
  OkamotoN n{rat(1, 2), rat(3, 2), rat(-1, 3), 2};
  CHECK(okamoto_equivalent(n, {2, rat(-1, 3), rat(3, 2), rat(1, 2)}));
  CHECK(okamoto_equivalent(n, {rat(-1, 2), rat(-3, 2), rat(-1, 3), 2}));
  CHECK_FALSE(okamoto_equivalent(n, {rat(-1, 2), rat(3, 2), rat(-1, 3), 2}));
  OkamotoN c = okamoto_canonical(n);
  CHECK(c == OkamotoN{2, rat(3, 2), rat(1, 2), rat(-1, 3)});
  CHECK(okamoto_canonical(c) == c);
}

TEST_CASE("h shifts") {
  HData a = h_from_corr(fw(1, 3, Regime::LowT, 10));
  CHECK(a.shift_t == rat(1, 2));
  CHECK(a.shift_c == rat(7, 8));
  HData b = h_from_corr(fw(0, 2, Regime::HighT, 10));
  CHECK(b.shift_t == 0);
  CHECK(b.shift_c == rat(5, 8));
  HData f4 = h_from_factor(elliptic_poly_eval(c05_factors()[3], 40), 4, 5);
  CHECK(check_residual(okamoto_residual(f4.h, f4.n)).order_verified >= 12);
  CHECK(f4.shift_t == rat(5, 4));
  CHECK(f4.shift_c == rat(-5, 8));
  CHECK(f4.n == OkamotoN{1, rat(3, 2), rat(-1, 2), 0});
}

TEST_CASE("Okamoto residual on h, constants and perturbations") {
  HData hd = h_from_corr(fw(0, 1, Regime::LowT, 20));
  CHECK(check_residual(okamoto_residual(hd.h, hd.n)).order_verified >= 20);
  // with h' = 0 the equation reduces to (n1n2n3n4)^2 = prod n_i^2
  OkamotoN n{rat(1, 3), rat(-2, 5), 1, rat(7, 2)};
  CHECK(okamoto_residual(SeriesK::constant(rat(5, 7), 20, Var::T), n).is_zero());
  SeriesK bad = hd.h + SeriesK::monomial(1, 6, hd.h.order(), Var::T);
  ResidualCheck rc = check_residual(okamoto_residual(bad, hd.n));
  CHECK_FALSE(rc.vanishes);
  CHECK(rc.first_nonzero <= 4);
}

TEST_CASE("FW bridge equals h from the correlation") {
  for (auto [M, N] : std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {1, 3}, {2, 4}}) {
    FwBridge b = h_from_fw(M, N, Regime::LowT, 40);
    HData h = h_from_corr(corr_fw(M, N, Regime::LowT, 40));
    CHECK(okamoto_equivalent(b.n, h.n));
    CHECK(b.h.truncate(28).agrees_with(h.h.truncate(28)));
  }
  CHECK_THROWS(h_from_fw(0, 2, Regime::HighT, 20));
}

TEST_CASE("lambda = 0 member solves the low-T equations") {
  for (auto [M, N] : std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 3}}) {
    Correlation z = corr_fw(M, N, Regime::LowT, 60);
    z.series = lambda_zero_member(z);
    SigmaSeries s = sigma_from_corr(z, SigmaVariant::Low);
    CHECK(check_residual(ode_residual(s, {OdeFamily::LowMN, M, N})).order_verified >= 24);
  }
}

TEST_CASE("duality checks") {
  for (auto [M, N] : std::vector<std::pair<int, int>>{{0, 2}, {1, 3}}) {
    KwReport k = kw_checks(M, N, 14);
    CHECK(k.ok());
    CHECK(k.invol.order_verified >= 14);
    CHECK(k.dual_points >= 20);
  }
  KwReport odd = kw_checks(1, 2, 10);
  CHECK_FALSE(odd.invol_applicable);
  DualCheck d = dual_check({OdeFamily::JMDiag, 2, 2}, 99u, 20);
  CHECK(d.consistent);
  CHECK(d.exponent.has_value());
}
