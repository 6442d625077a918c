#include "ising/correlation.hpp"
#include "ising/determinant.hpp"
#include "ising/identities.hpp"
#include "ising/matrix_elements.hpp"
#include "test_util.hpp"

#include <doctest.h>

using namespace ising;
using testutil::rand_series;

namespace {

SeriesK det2(const SeriesK& a, const SeriesK& b, const SeriesK& c, const SeriesK& d) { return a * d - b * c; }

SeriesK det3(const std::vector<std::vector<SeriesK>>& m) {
  return m[0][0] * det2(m[1][1], m[1][2], m[2][1], m[2][2]) - m[0][1] * det2(m[1][0], m[1][2], m[2][0], m[2][2]) +
         m[0][2] * det2(m[1][0], m[1][1], m[2][0], m[2][1]);
}

std::vector<SeriesK> symbol(std::mt19937& g, int n, int order) {
  std::vector<SeriesK> A;
  for (int i = 0; i < n; ++i) A.push_back(rand_series(g, 0, order, i == 0));
  return A;
}

SeriesMatrix sym_toeplitz(const std::vector<SeriesK>& A, int n) {
  return SeriesMatrix::toeplitz(n, [&](int idx) { return A[static_cast<size_t>(std::abs(idx))]; });
}

}  // namespace

TEST_CASE("small determinants") {
  std::mt19937 g(3);
  SeriesK s = rand_series(g, 0, 8);
  CHECK(det_series(SeriesMatrix::from_rows({{s}})).agrees_with(s));
  auto a = rand_series(g, 0, 8, true), b = rand_series(g, 0, 8), c = rand_series(g, 0, 8, true),
       d = rand_series(g, 1, 8), e = rand_series(g, 0, 8, true), z = SeriesK::zero(8);
  // upper triangular
  SeriesMatrix u = SeriesMatrix::from_rows({{a, b, d}, {z, c, b}, {z, z, e}});
  CHECK(det_series(u).agrees_with(a * c * e));
}

TEST_CASE("row swap flips the sign; block diagonal multiplies") {
  std::mt19937 g(5);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<std::vector<SeriesK>> r(3);
    for (auto& row : r)
      for (int j = 0; j < 3; ++j) row.push_back(rand_series(g, trial % 2, 10));
    SeriesK d = det_series(SeriesMatrix::from_rows(r));
    CHECK(d.agrees_with(det3(r)));
    std::swap(r[0], r[2]);
    CHECK(det_series(SeriesMatrix::from_rows(r)).agrees_with(-d));
  }
  SeriesK p = rand_series(g, 0, 10, true), q = rand_series(g, 0, 10), w = rand_series(g, 1, 10),
          x = rand_series(g, 0, 10, true), y = rand_series(g, 0, 10, true), z = SeriesK::zero(10);
  SeriesMatrix blk = SeriesMatrix::from_rows({{p, q, z}, {w, x, z}, {z, z, y}});
  CHECK(det_series(blk).agrees_with(det2(p, q, w, x) * y));
}

TEST_CASE("Bareiss agrees with cofactor expansion, including positive-valuation pivots") {
  std::mt19937 g(9);
  for (int trial = 0; trial < 6; ++trial) {
    std::vector<std::vector<SeriesK>> r(4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) r[static_cast<size_t>(i)].push_back(rand_series(g, (i + j + trial) % 3, 12));
    SeriesMatrix m = SeriesMatrix::from_rows(r);
    CHECK(det_bareiss(m).agrees_with(det_cofactor(m)));
  }
}

TEST_CASE("Wilf factors match the explicit D_2..D_5 displays") {
  std::mt19937 g(17);
  auto A = symbol(g, 5, 12);
  // D_2
  {
    auto [plus, minus] = wilf_factor(sym_toeplitz(A, 2));
    CHECK((plus * minus).agrees_with((A[0] - A[1]) * (A[0] + A[1])));
  }
  // D_3
  {
    SeriesK shown = (A[0] - A[2]) * det2(A[0] + A[2], Rational(2) * A[1], A[1], A[0]);
    auto m = sym_toeplitz(A, 3);
    auto [plus, minus] = wilf_factor(m);
    CHECK((plus * minus).agrees_with(shown));
    CHECK(det_series(m).agrees_with(shown));
  }
  // D_4
  {
    SeriesK f1 = det2(A[0] + A[3], A[1] + A[2], A[1] + A[2], A[0] + A[1]);
    SeriesK f2 = det2(A[0] - A[1], A[1] - A[2], A[1] - A[2], A[0] - A[3]);
    auto m = sym_toeplitz(A, 4);
    auto [plus, minus] = wilf_factor(m);
    CHECK((plus * minus).agrees_with(f1 * f2));
    CHECK(det_series(m).agrees_with(f1 * f2));
  }
  // D_5
  {
    SeriesK f1 = det3({{A[0] + A[4], A[1] + A[3], Rational(2) * A[2]},
                       {A[1] + A[3], A[0] + A[2], Rational(2) * A[1]},
                       {A[2], A[1], A[0]}});
    SeriesK f2 = det2(A[0] - A[2], A[1] - A[3], A[1] - A[3], A[0] - A[4]);
    auto m = sym_toeplitz(A, 5);
    auto [plus, minus] = wilf_factor(m);
    CHECK((plus * minus).agrees_with(f1 * f2));
    CHECK(det_series(m).agrees_with(f1 * f2));
  }
}

TEST_CASE("Wilf product equals the determinant for symmetric Toeplitz N <= 6") {
  std::mt19937 g(23);
  for (int n = 1; n <= 6; ++n) {
    auto A = symbol(g, n, 10);
    auto m = sym_toeplitz(A, n);
    auto [plus, minus] = wilf_factor(m);
    CHECK((plus * minus).agrees_with(det_series(m)));
  }
}

TEST_CASE("Wilf rejects non-symmetric input") {
  std::mt19937 g(29);
  auto A = symbol(g, 3, 8);
  SeriesMatrix m = SeriesMatrix::toeplitz(3, [&](int idx) { return idx >= 0 ? A[static_cast<size_t>(idx)] : A[0] + A[1]; });
  CHECK_THROWS_AS(wilf_factor(m), SeriesError);
}

TEST_CASE("Wilf on the FW symbol of C(1,4)") {
  const int w = 24;
  SeriesMatrix m = SeriesMatrix::toeplitz(4, [&](int idx) { return fw_low_element(1, 4, idx, w); });
  CHECK(m.is_symmetric_toeplitz());
  auto [plus, minus] = wilf_factor(m);
  CHECK(equal_through(plus * minus, fw_determinant(1, 4, Regime::LowT, 16), 16));
}

TEST_CASE("Toeplitz determinant reaches the requested order") {
  SeriesK d = toeplitz_det_to_order(3, [](int idx, int w) { return row_low_element(idx, w); }, 18);
  CHECK(d.order() >= 18);
  CHECK(equal_through(d, corr_row(3, Regime::LowT, 18).series, 18));
}
