#include "ising/matrix_elements.hpp"

#include "ising/hypergeometric.hpp"

#include <cstdlib>

namespace ising {

namespace {

const Rational kHalf(1, 2);

int sgn_pow(int e) { return (e % 2 == 0) ? 1 : -1; }

// c * k^power * 2F1([a,b],[c2], k^2)
SeriesK scaled_f(const Rational& c, int power, const Rational& a, const Rational& b, const Rational& c2,
                 int korder) {
  if (c == 0 || power > korder) return SeriesK::zero(korder);
  return (c * hyp2f1_k(a, b, c2, korder - power)).shift(power);
}

SeriesK sqrt_one_minus_t(int korder) { return one_minus_t_pow(kHalf, korder); }

void require_fw(const MatrixElementFamily& f, bool even) {
  if (f.M < 0 || f.N < 0) throw SeriesError("FW family needs M, N >= 0");
  bool is_even = (f.M + f.N) % 2 == 0;
  if (is_even != even)
    throw SeriesError(std::string("family ") + to_string(f.kind) + " requires M+N " + (even ? "even" : "odd"));
}

SeriesK general_eta0(const Rational& p, const Rational& pp, const Rational& xi, int m, int korder) {
  if (m <= 0) {
    int a = -m;
    return scaled_f(pochhammer(-pp, a) * sgn_pow(a) / factorial(a), a, -p, -pp + a, 1 + a, korder);
  }
  return scaled_f(xi * pochhammer(-p, m) * sgn_pow(m) / factorial(m), m, m - p, -pp, m + 1, korder);
}

SeriesK high_row(int n, bool positive, int korder) {
  // n >= 0 labels a_{+-(2n+1)}
  int w = korder + 4;
  SeriesK s = sqrt_one_minus_t(w);
  SeriesK one = SeriesK::constant(1, w);
  SeriesK f1 = hyp2f1_k(n - kHalf, n + kHalf, 2 * n + 1, w);
  SeriesK f2 = hyp2f1_k(n + kHalf, n + kHalf, 2 * n + 1, w);
  SeriesK pre = positive ? (one - s) : (one + s);
  SeriesK bracket = positive ? (f1 + s * f2) : (f1 - s * f2);
  // (1/2)_n/n! (k/2)^{2(n-1)} / 4
  Rational c = pochhammer(kHalf, n) / factorial(n) * pow_int(kHalf, 2 * (n - 1)) / 4;
  return (c * (pre * bracket)).shift(2 * (n - 1)).truncate(korder);
}

}  // namespace

std::string to_string(ElementKind k) {
  switch (k) {
    case ElementKind::RowLowEven: return "RowLowEven";
    case ElementKind::RowLowOdd: return "RowLowOdd";
    case ElementKind::DiagLow: return "DiagLow";
    case ElementKind::DiagHigh: return "DiagHigh";
    case ElementKind::HighRowPos: return "HighRowPos";
    case ElementKind::HighRowNeg: return "HighRowNeg";
    case ElementKind::FWEvenNeg: return "FWEvenNeg";
    case ElementKind::FWEvenPos: return "FWEvenPos";
    case ElementKind::FWOdd: return "FWOdd";
    case ElementKind::FWHighEven_mGe1: return "FWHighEven_mGe1";
    case ElementKind::FWHighEven_mLt1: return "FWHighEven_mLt1";
    case ElementKind::FWHighOdd_mGe1: return "FWHighOdd_mGe1";
    case ElementKind::FWHighOdd_mLt1: return "FWHighOdd_mLt1";
    case ElementKind::GeneralFW: return "GeneralFW";
  }
  return "?";
}

SeriesK matrix_element(const MatrixElementFamily& f, int n, int korder) {
  switch (f.kind) {
    case ElementKind::RowLowEven: {
      if (n % 2 != 0) throw SeriesError("RowLowEven: odd index");
      int m = std::abs(n) / 2;
      Rational c = pochhammer(kHalf, m) / factorial(m) * pow_int(kHalf, 2 * m);
      int w = korder;
      return (sqrt_one_minus_t(w) * scaled_f(c, 2 * m, m + kHalf, m + kHalf, 2 * m + 1, w)).truncate(korder);
    }
    case ElementKind::RowLowOdd: {
      if (n % 2 == 0) throw SeriesError("RowLowOdd: even index");
      int m = (std::abs(n) - 1) / 2;
      Rational c = pochhammer(kHalf, m) / factorial(m) * pow_int(kHalf, 2 * m + 1);
      if (n > 0) c = -c;
      return scaled_f(c, 2 * m + 1, m + kHalf, m + kHalf, 2 * m + 2, korder);
    }
    case ElementKind::DiagLow:
      // integrand [(1 - k e^{-i th})/(1 - k e^{i th})]^{1/2} e^{i n th}
      return sgn_pow(std::abs(n)) * general_eta0(-kHalf, kHalf, 1, -n, korder);
    case ElementKind::DiagHigh:
      // alpha2 = 1/k pulls out e^{-i th}; the overall sign fixes C(N,N) > 0
      return -sgn_pow(std::abs(n - 1)) * general_eta0(kHalf, -kHalf, 1, 1 - n, korder);
    case ElementKind::HighRowPos:
      if (n % 2 == 0) return SeriesK::zero(korder);
      if (n < 0) throw SeriesError("HighRowPos: negative index");
      return high_row((n - 1) / 2, true, korder);
    case ElementKind::HighRowNeg:
      if (n % 2 == 0) return SeriesK::zero(korder);
      if (n > 0) throw SeriesError("HighRowNeg: positive index");
      return high_row((-n - 1) / 2, false, korder);
    case ElementKind::FWEvenNeg: {
      require_fw(f, true);
      if (n > 0) throw SeriesError("FWEvenNeg: index must be <= 0");
      int a = -n;
      Rational x(f.N - f.M - 1, 2), y(f.N - f.M + 1, 2);
      return scaled_f(pochhammer(y, a) * sgn_pow(a) / factorial(a), a, x, y + a, 1 + a, korder);
    }
    case ElementKind::FWEvenPos: {
      require_fw(f, true);
      if (n < 1) throw SeriesError("FWEvenPos: index must be >= 1");
      Rational x(f.N - f.M - 1, 2), y(f.N - f.M + 1, 2);
      return scaled_f(pochhammer(x, n) * sgn_pow(n) / factorial(n), n, y, x + n, 1 + n, korder);
    }
    case ElementKind::FWOdd: {
      require_fw(f, false);
      int a = std::abs(n);
      Rational z(f.N - f.M, 2);
      return scaled_f(pochhammer(z, a) * sgn_pow(a) / factorial(a), a, z, z + a, 1 + a, korder);
    }
    case ElementKind::FWHighEven_mGe1: {
      require_fw(f, true);
      if (n < 1) throw SeriesError("FWHighEven_mGe1: index must be >= 1");
      Rational x(f.N - f.M - 1, 2);
      return scaled_f(pochhammer(x + 1, n - 1) * sgn_pow(n - 1) / factorial(n - 1), n - 1, x, x + n, n, korder);
    }
    case ElementKind::FWHighEven_mLt1: {
      require_fw(f, true);
      if (n >= 1) throw SeriesError("FWHighEven_mLt1: index must be < 1");
      Rational x(f.N - f.M - 1, 2), y(f.N - f.M + 1, 2);
      return scaled_f(pochhammer(x, 1 - n) * sgn_pow(1 - n) / factorial(1 - n), 1 - n, y, y - n, 2 - n, korder);
    }
    case ElementKind::FWHighOdd_mGe1: {
      require_fw(f, false);
      if (n < 1) throw SeriesError("FWHighOdd_mGe1: index must be >= 1");
      Rational z(f.N - f.M, 2);
      return scaled_f(pochhammer(z, n - 1) * sgn_pow(n - 1) / factorial(n - 1), n - 1, z, z - 1 + n, n, korder);
    }
    case ElementKind::FWHighOdd_mLt1: {
      require_fw(f, false);
      if (n >= 1) throw SeriesError("FWHighOdd_mLt1: index must be < 1");
      Rational z(f.N - f.M, 2);
      return scaled_f(pochhammer(z, 1 - n) * sgn_pow(1 - n) / factorial(1 - n), 1 - n, z, z + 1 - n, 2 - n, korder);
    }
    case ElementKind::GeneralFW:
      if (f.eta != 0)
        throw SeriesError("GeneralFW: only the eta = 0 limit has a pole-free series form");
      return general_eta0(f.p, f.pp, f.xi, n, korder);
  }
  throw SeriesError("unknown element family");
}

SeriesK row_low_element(int n, int korder) {
  return matrix_element(MatrixElementFamily::of(n % 2 == 0 ? ElementKind::RowLowEven : ElementKind::RowLowOdd), n,
                        korder);
}

SeriesK row_high_element(int n, int korder) {
  return matrix_element(MatrixElementFamily::of(n > 0 ? ElementKind::HighRowPos : ElementKind::HighRowNeg), n,
                        korder);
}

SeriesK row_high_symbol(int n, int korder) {
  if (n % 2 == 0) return SeriesK::zero(korder);
  SeriesK e = row_high_element(n, korder);
  return n > 0 ? -e : e;
}

SeriesK diag_element(bool high, int n, int korder) {
  return matrix_element(MatrixElementFamily::of(high ? ElementKind::DiagHigh : ElementKind::DiagLow), n, korder);
}

SeriesK fw_low_element(int M, int N, int m, int korder) {
  if ((M + N) % 2 != 0) return matrix_element(MatrixElementFamily::fw(ElementKind::FWOdd, M, N), m, korder);
  auto kind = m <= 0 ? ElementKind::FWEvenNeg : ElementKind::FWEvenPos;
  return matrix_element(MatrixElementFamily::fw(kind, M, N), m, korder);
}

SeriesK fw_high_element(int M, int N, int m, int korder) {
  bool even = (M + N) % 2 == 0;
  ElementKind kind;
  if (even) kind = m >= 1 ? ElementKind::FWHighEven_mGe1 : ElementKind::FWHighEven_mLt1;
  else kind = m >= 1 ? ElementKind::FWHighOdd_mGe1 : ElementKind::FWHighOdd_mLt1;
  return matrix_element(MatrixElementFamily::fw(kind, M, N), m, korder);
}

SeriesK general_fw_element_fourier(const Rational& p, const Rational& pp, int m, int korder) {
  std::vector<Rational> cs(korder >= 0 ? static_cast<size_t>(korder + 1) : 0);
  for (int j = std::max(0, -m); 2 * j + m <= korder; ++j) {
    int e = 2 * j + m;
    cs[static_cast<size_t>(e)] += binomial(p, j) * binomial(pp, j + m) * sgn_pow(e);
  }
  return SeriesK::from_coeffs(0, std::move(cs), korder);
}

SeriesK alpha_of_k(int korder) {
  SeriesK one = SeriesK::constant(1, korder + 1);
  return (one - series_sqrt(one_minus_t(korder + 1))).shift(-1);
}

SeriesK k_of_alpha(int order) {
  SeriesK a = SeriesK::k(order);
  return (2 * a) / (SeriesK::constant(1, order) + a * a);
}

}  // namespace ising
