#pragma once

#include <complex>
#include <vector>

// Finite cosine series with complex coefficients and the index-dilation
// (downsampling) operator behind the closed kernel forms: keeping every
// n-th coefficient of f equals averaging f over the n shifted arguments
// (t + 2 pi j)/n.  Feeding in the plane-wave coefficients
// e^{-ix cos t} = J_0(x) + 2 sum_k (-i)^k J_k(x) cos(kt) and downsampling
// by n reproduces the dimension-2 kernel at a = 2/n.

namespace rdft {

struct CosineSeries {
  std::vector<std::complex<double>> coeffs;  // c_0, c_1, ..., series sum_k c_k cos(kt)
};

// sum_k c_k cos(k t), compensated summation.
std::complex<double> eval_series(const CosineSeries& s, double t);

// g with g_k = c_{n k}.
CosineSeries downsample_coeffs(const CosineSeries& s, int n);

// (1/n) sum_{j=0}^{n-1} f((t + 2 pi j)/n), evaluated pointwise.
std::complex<double> downsample_by_shifts(const CosineSeries& s, int n,
                                          double t);

// Jacobi-Anger coefficients of e^{-i x cos t} through index kmax inclusive.
// The caller picks kmax large enough for its tolerance; coefficients decay
// like 2 (x/2)^k / k!.
CosineSeries jacobi_anger_coeffs(double x, int kmax);

}  // namespace rdft
