#include "ising/cosgrove.hpp"
#include "test_util.hpp"

#include <doctest.h>

using namespace ising;

TEST_CASE("exact linear solve") {
  LinearSolve a = solve_linear({{2, 1}, {1, 3}}, {3, 5});
  CHECK(a.rank == 2);
  CHECK(a.consistent);
  CHECK(a.x[0] == rat(4, 5));
  CHECK(a.x[1] == rat(7, 5));
  LinearSolve b = solve_linear({{1, 2}, {2, 4}}, {1, 2});
  CHECK(b.rank == 1);
  CHECK(b.consistent);
  LinearSolve c = solve_linear({{1, 2}, {2, 4}}, {1, 3});
  CHECK_FALSE(c.consistent);
}

TEST_CASE("rational roots") {
  // (x - 1/2)(x + 3)(x - 2)^2 = x^4 - 3/2 x^3 - 15/2 x^2 + 16 x - 6
  auto r = rational_roots({-6, 16, rat(-15, 2), rat(-3, 2), 1});
  REQUIRE(r.has_value());
  CHECK(*r == std::vector<Rational>{-3, rat(1, 2), 2, 2});
  CHECK_FALSE(rational_roots({-2, 0, 1}).has_value());
  CHECK(rational_roots({0, 0, 1})->size() == 2);
}

TEST_CASE("fit recovers each family's parameters with surplus") {
  for (auto [M, N] : std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 2}, {1, 3}})
    for (Regime r : {Regime::LowT, Regime::HighT}) {
      bool tilde = r == Regime::HighT && (M + N) % 2 == 1;
      SigmaSeries s = sigma_from_corr(corr_fw(M, N, r, 60, tilde));
      CosgroveFit fit = cosgrove_fit(s.series, 20);
      REQUIRE(fit.unique());
      CHECK(fit.surplus >= 6);
      CHECK(*fit.params == cosgrove_params_for(ode_for(s)));
    }
}

TEST_CASE("degenerate and inconsistent fits") {
  CosgroveFit c = cosgrove_fit(SeriesK::constant(3, 40, Var::T), 12);
  CHECK(c.consistent);
  CHECK(c.rank == 1);
  CHECK(c.solution_dim == 5);
  CHECK_FALSE(c.unique());
  SigmaSeries s = sigma_from_corr(corr_fw(0, 2, Regime::LowT, 60));
  SeriesK bad = s.series + SeriesK::monomial(rat(1, 9), 12, s.series.order(), Var::T);
  CHECK_FALSE(cosgrove_fit(bad, 20).consistent);
  CosgroveFit clamp = cosgrove_fit(s.series, 500);
  CHECK(clamp.diagnostic.find("clamped") != std::string::npos);
}

TEST_CASE("Okamoto reduction of synthetic parameters") {
  // Cosgrove parameters with c5 = c6 = 0 built from random rational n
  std::mt19937 g(41);
  for (int trial = 0; trial < 20; ++trial) {
    OkamotoN n;
    for (auto& x : n) x = testutil::rand_rat(g, 7, 4);
    Rational x1 = n[0] * n[0], x2 = n[1] * n[1], x3 = n[2] * n[2], x4 = n[3] * n[3];
    Rational e1 = x1 + x2 + x3 + x4;
    Rational e2 = x1 * x2 + x1 * x3 + x1 * x4 + x2 * x3 + x2 * x4 + x3 * x4;
    Rational e3 = x1 * x2 * x3 + x1 * x2 * x4 + x1 * x3 * x4 + x2 * x3 * x4;
    CosgroveParams p;
    p.c7 = -e1 / 4;
    p.c8 = -(n[0] * n[1] * n[2] * n[3]);
    p.c9 = -(e2 + 2 * p.c8) / 4;
    p.c10 = -e3 / 4;
    OkamotoReduction red = cosgrove_to_okamoto(p);
    REQUIRE(red.ok());
    CHECK(red.A == 0);
    CHECK(red.B == 0);
    CHECK(okamoto_equivalent(red.candidates.front().n, n));
    CHECK(red.candidates.front().n == okamoto_canonical(n));
  }
}

TEST_CASE("Cosgrove fit to Okamoto form on correlations") {
  for (auto [M, N, r, want] : std::vector<std::tuple<int, int, Regime, OkamotoN>>{
           {0, 1, Regime::LowT, okamoto_low(0, 1)},
           {0, 2, Regime::HighT, okamoto_high_even(0, 2)},
           {1, 2, Regime::HighT, okamoto_high_odd(1, 2)}}) {
    SigmaSeries s = sigma_from_corr(corr_fw(M, N, r, 60, (M + N) % 2 == 1 && r == Regime::HighT));
    CosgroveFit fit = cosgrove_fit(s.series, 20);
    REQUIRE(fit.unique());
    OkamotoReduction red = cosgrove_to_okamoto(*fit.params, s.series);
    REQUIRE(red.ok());
    CHECK(red.candidates.front().n == okamoto_canonical(want));
    CHECK(check_residual(okamoto_residual(red.candidates.front().hSeries, want)).vanishes);
  }
}

TEST_CASE("irrational quartic is reported") {
  CosgroveParams p{0, 0, rat(-1, 4), 0, rat(1, 4), 0};
  OkamotoReduction red = cosgrove_to_okamoto(p);
  CHECK_FALSE(red.ok());
  CHECK(red.diagnostic.find("irrational") != std::string::npos);
}
