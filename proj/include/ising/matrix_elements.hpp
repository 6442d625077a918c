#ifndef ISING_MATRIX_ELEMENTS_HPP
#define ISING_MATRIX_ELEMENTS_HPP

#include "ising/series.hpp"

#include <string>

namespace ising {

enum class ElementKind {
  RowLowEven,       // a_{2m}, T < Tc, nu = -k
  RowLowOdd,        // a_{+-(2m+1)}, T < Tc, nu = -k
  DiagLow,          // diagonal correlation elements, alpha1 = 0, alpha2 = k
  DiagHigh,         // diagonal correlation elements, alpha1 = 0, alpha2 = 1/k
  HighRowPos,       // a_{2n+1}, T > Tc, nu = -k_>
  HighRowNeg,       // a_{-(2n+1)}, T > Tc, nu = -k_>
  FWEvenNeg,        // A_{-|m|}, M+N even
  FWEvenPos,        // A_m, m >= 1, M+N even
  FWOdd,            // A_{+-m}, M+N odd
  FWHighEven_mGe1,
  FWHighEven_mLt1,
  FWHighOdd_mGe1,
  FWHighOdd_mLt1,
  GeneralFW         // eta = 0 closed forms in p, p'
};

struct MatrixElementFamily {
  ElementKind kind = ElementKind::RowLowEven;
  Rational p = 0, pp = 0, eta = 0, xi = 1;
  int M = 0, N = 0;

  static MatrixElementFamily of(ElementKind k) { return {k, 0, 0, 0, 1, 0, 0}; }
  static MatrixElementFamily fw(ElementKind k, int M, int N) { return {k, 0, 0, 0, 1, M, N}; }
  static MatrixElementFamily general(Rational p, Rational pp, Rational eta = 0, Rational xi = 1) {
    return {ElementKind::GeneralFW, std::move(p), std::move(pp), std::move(eta), std::move(xi), 0, 0};
  }
};

std::string to_string(ElementKind k);

// the element with index n (a_n or A_m), exact through k^korder
SeriesK matrix_element(const MatrixElementFamily& fam, int n, int korder);

// index-dispatching helpers for whole Toeplitz symbols
SeriesK row_low_element(int n, int korder);
SeriesK row_high_element(int n, int korder);
// Same, but with the sign of the defining Fourier integral: positive odd
// indices flip.  These are the Toeplitz symbol whose 2N x 2N determinant is C(0,2N).
SeriesK row_high_symbol(int n, int korder);
SeriesK diag_element(bool high, int n, int korder);
SeriesK fw_low_element(int M, int N, int m, int korder);
SeriesK fw_high_element(int M, int N, int m, int korder);

// Fourier coefficient sum_j C(p,j) C(p',j+m) (-k)^(2j+m)
SeriesK general_fw_element_fourier(const Rational& p, const Rational& pp, int m, int korder);

// alpha = (1 - sqrt(1-k^2))/k as a k-series
SeriesK alpha_of_k(int korder);
// k = 2 alpha / (1 + alpha^2) as an alpha-series
SeriesK k_of_alpha(int order);

}  // namespace ising

#endif
