#include "ising/boundary.hpp"
#include "test_util.hpp"

#include <doctest.h>

using namespace ising;

namespace {

struct Printed {
  Rational c0, c1, c2, c3;
};

// closed forms for the first four coefficients on each branch, written out term by term
Printed printed(const OkamotoN& n, Branch b) {
  const Rational &n1 = n[0], &n2 = n[1], &n3 = n[2], &n4 = n[3];
  Printed p;
  Rational D, num2, N3;
  int sgn2 = 1, sgn3 = 1;
  switch (b) {
    case Branch::B1:
      p.c0 = (-n1 * n2 - n3 * n4 + (n1 + n2) * (n3 + n4)) / 2;
      p.c1 = ((n1 + n2) * n3 * n4 - n1 * n2 * (n3 + n4)) / (n1 + n2 - n3 - n4);
      D = n1 + n2 - n3 - n4;
      num2 = (n1 + n2) * (n1 - n3) * (n1 - n4) * (n2 - n3) * (n2 - n4) * (n3 + n4);
      sgn2 = -1;
      N3 = n1 * n1 * n2 - n1 * n1 * n3 - n1 * n1 * n4 - n2 * n2 * n3 - n2 * n2 * n4 - n3 * n3 * n4 +
           n1 * n2 * n2 + n1 * n3 * n3 + n1 * n4 * n4 + n2 * n3 * n3 + n2 * n4 * n4 - n3 * n4 * n4 -
           n1 * n2 * n3 - n1 * n2 * n4 + n1 * n3 * n4 + n2 * n3 * n4 - n1 - n2 + n3 + n4;
      break;
    case Branch::B2:
      p.c0 = (n1 * n2 + n3 * n4 + (n1 - n2) * (n3 - n4)) / 2;
      p.c1 = ((n1 - n2) * n3 * n4 - n1 * n2 * (n3 - n4)) / (-n1 + n2 + n3 - n4);
      D = n1 - n2 - n3 + n4;
      num2 = (n1 - n2) * (n1 - n3) * (n1 + n4) * (n2 + n3) * (n2 - n4) * (n3 - n4);
      sgn2 = -1;
      sgn3 = -1;
      N3 = n1 * n1 * n2 + n1 * n1 * n3 - n1 * n1 * n4 + n2 * n2 * n3 - n2 * n2 * n4 - n3 * n3 * n4 -
           n1 * n2 * n2 - n1 * n3 * n3 - n1 * n4 * n4 + n2 * n3 * n3 + n2 * n4 * n4 + n3 * n4 * n4 -
           n1 * n2 * n3 + n1 * n2 * n4 + n1 * n3 * n4 - n2 * n3 * n4 + n1 - n2 - n3 + n4;
      break;
    case Branch::B3:
      p.c0 = (n1 * n2 + n3 * n4 - (n1 - n2) * (n3 - n4)) / 2;
      p.c1 = ((n1 - n2) * n3 * n4 + n1 * n2 * (n3 - n4)) / (-n1 + n2 - n3 + n4);
      D = n1 - n2 + n3 - n4;
      num2 = (n1 - n2) * (n1 + n3) * (n1 - n4) * (n2 - n3) * (n2 + n4) * (n3 - n4);
      sgn3 = -1;
      N3 = n1 * n1 * n2 - n1 * n1 * n3 + n1 * n1 * n4 - n2 * n2 * n3 + n2 * n2 * n4 + n3 * n3 * n4 -
           n1 * n2 * n2 - n1 * n3 * n3 - n1 * n4 * n4 + n2 * n3 * n3 + n2 * n4 * n4 - n3 * n4 * n4 +
           n1 * n2 * n3 - n1 * n2 * n4 + n1 * n3 * n4 - n2 * n3 * n4 + n1 - n2 + n3 - n4;
      break;
    case Branch::B4:
      p.c0 = (-n1 * n2 - n3 * n4 - (n1 + n2) * (n3 + n4)) / 2;
      p.c1 = ((n1 + n2) * n3 * n4 + n1 * n2 * (n3 + n4)) / (n1 + n2 + n3 + n4);
      D = n1 + n2 + n3 + n4;
      num2 = (n1 + n2) * (n1 + n3) * (n1 + n4) * (n2 + n3) * (n2 + n4) * (n3 + n4);
      N3 = n1 * n1 * n2 + n1 * n1 * n3 + n1 * n1 * n4 + n2 * n2 * n3 + n2 * n2 * n4 + n3 * n3 * n4 +
           n1 * n2 * n2 + n1 * n3 * n3 + n1 * n4 * n4 + n2 * n3 * n3 + n2 * n4 * n4 + n3 * n4 * n4 +
           n1 * n2 * n3 + n1 * n2 * n4 + n1 * n3 * n4 + n2 * n3 * n4 - n1 - n2 - n3 - n4;
      break;
  }
  p.c2 = sgn2 * num2 / (D * D * (D + 1) * (D - 1));
  p.c3 = sgn3 * 2 * N3 * p.c2 / (D * (D + 2) * (D - 2));
  return p;
}

const Branch kBranches[] = {Branch::B1, Branch::B2, Branch::B3, Branch::B4};

}  // namespace

TEST_CASE("generic n: solver reproduces the closed forms on every branch") {
  std::mt19937 g(7);
  int done = 0;
  while (done < 25) {
    OkamotoN n;
    for (auto& x : n) x = testutil::rand_rat(g, 5, 11);
    for (Branch b : kBranches) {
      Rational D = branch_denominator(n, b);
      if (D == 0 || abs(D) == 1 || abs(D) == 2) continue;
      BranchSolution s;
      try {
        s = solve_analytic(n, b, {}, 6);
      } catch (const BoundaryError&) {
        continue;  // a resonance for this draw; not the generic case
      }
      Printed p = printed(n, b);
      INFO(to_string(b) << " n = " << to_string(n));
      CHECK(s.coeffs[0] == p.c0);
      CHECK(s.coeffs[1] == p.c1);
      CHECK(s.coeffs[2] == p.c2);
      CHECK(s.coeffs[3] == p.c3);
      BranchSeed seed = branch_seed(n, b);
      CHECK(seed.c0 == p.c0);
      REQUIRE(seed.c3.has_value());
      CHECK(*seed.c3 == p.c3);
      // h'' enters the equation, so one order is lost
      CHECK(check_residual(okamoto_residual(s.series(), n)).order_verified >= 5);
      ++done;
    }
  }
}

TEST_CASE("leading coefficient makes the lowest-order equation vanish") {
  std::mt19937 g(11);
  for (int i = 0; i < 20; ++i) {
    OkamotoN n;
    for (auto& x : n) x = testutil::rand_rat(g, 4, 9);
    for (Branch b : kBranches) {
      Rational D = branch_denominator(n, b);
      if (D == 0 || abs(D) == 1 || abs(D) == 2) continue;
      Printed p = printed(n, b);
      CHECK(f0_value(n, p.c0, p.c1) == 0);
    }
  }
}

TEST_CASE("low-T resonances: c_k = 0 for 2 <= k <= N, free constant at N + 1") {
  for (auto [M, N] : std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}}) {
    OkamotoN n = okamoto_low(M, N);
    BranchSolution s = solve_analytic(n, Branch::B1, {{N + 1, 0}}, N + 4);
    for (int k = 2; k <= N; ++k) CHECK(s.coeffs[static_cast<size_t>(k)] == 0);
    REQUIRE_FALSE(s.resonances.empty());
    CHECK(s.resonances.front().order == N + 1);
    CHECK(branch_seed(n, Branch::B1).c0 == branch_seed(n, Branch::B4).c0);
  }
}

TEST_CASE("low-T matching reproduces the printed bracket values") {
  struct Case {
    int M, N;
    Rational v;
  };
  for (const Case& c : std::vector<Case>{{0, 1, rat(-1, 64)},
                                         {0, 2, rat(1, 256)},
                                         {1, 2, rat(-1, 256)},
                                         {0, 3, rat(-9, 16384)},
                                         {1, 3, rat(15, 16384)}}) {
    Correlation corr = corr_fw(c.M, c.N, Regime::LowT, 60);
    BranchSolution s = solve_analytic(okamoto_low(c.M, c.N), Branch::B1, {{c.N + 1, 0}}, c.N + 4);
    LambdaMatch lm = match_lambda(corr, s);
    CHECK(lm.resonance_order == c.N + 1);
    CHECK(lm.bracket_coefficient == c.v);
  }
}

TEST_CASE("high-T seeds and branch") {
  OkamotoN n = okamoto_high_even(0, 2);
  CHECK(branch_seed(n, Branch::B2).c0 == rat(-13, 8));
  CHECK(branch_seed(n, Branch::B3).c0 == rat(3, 8));
  Correlation c = corr_fw(0, 2, Regime::HighT, 60);
  CHECK(natural_branch(c) == Branch::B2);
  BranchSolution s = solve_analytic(n, Branch::B2, {{4, 0}}, 6);
  REQUIRE_FALSE(s.resonances.empty());
  CHECK(s.resonances.front().order == 4);
  CHECK_NOTHROW(match_lambda(c, s));
}

TEST_CASE("failures are reported") {
  OkamotoN bad{rat(1, 2), rat(17, 10), rat(1, 5), 0};
  CHECK_THROWS_WITH_AS(solve_analytic(bad, Branch::B1, {{3, 1}}, 6), doctest::Contains("obstruction"),
                       BoundaryError);
  CHECK_THROWS_WITH_AS(solve_analytic(okamoto_low(0, 2), Branch::B1, {}, 6),
                       doctest::Contains("missing scheduled constant"), BoundaryError);
  Correlation c = corr_fw(0, 2, Regime::LowT, 60);
  BranchSolution wrong = solve_analytic(okamoto_low(0, 2), Branch::B2, {{2, 0}}, 6);
  CHECK_THROWS_WITH_AS(match_lambda(c, wrong), doctest::Contains("wrong branch"), BoundaryError);
  CHECK(parse_branch("B3") == Branch::B3);
  CHECK_THROWS(parse_branch("B5"));
}
