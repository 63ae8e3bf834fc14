#include "rdft/cosine_series.hpp"

#include <cmath>
#include <stdexcept>

#include "rdft/specfun.hpp"

namespace rdft {
namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;
}

std::complex<double> eval_series(const CosineSeries& s, double t) {
  std::complex<double> sum = 0.0, comp = 0.0;
  for (size_t k = 0; k < s.coeffs.size(); ++k) {
    std::complex<double> y = s.coeffs[k] * std::cos((double)k * t) - comp;
    std::complex<double> tt = sum + y;
    comp = (tt - sum) - y;
    sum = tt;
  }
  return sum;
}

CosineSeries downsample_coeffs(const CosineSeries& s, int n) {
  if (n < 1) throw std::domain_error("downsample_coeffs: n must be >= 1");
  CosineSeries g;
  for (size_t k = 0; n * k < s.coeffs.size(); ++k)
    g.coeffs.push_back(s.coeffs[n * k]);
  return g;
}

std::complex<double> downsample_by_shifts(const CosineSeries& s, int n,
                                          double t) {
  if (n < 1) throw std::domain_error("downsample_by_shifts: n must be >= 1");
  std::complex<double> sum = 0.0;
  for (int j = 0; j < n; ++j)
    sum += eval_series(s, (t + 2.0 * kPi * j) / n);
  return sum / (double)n;
}

CosineSeries jacobi_anger_coeffs(double x, int kmax) {
  if (kmax < 0) throw std::domain_error("jacobi_anger_coeffs: kmax < 0");
  static const std::complex<double> mi_pow[4] = {
      {1.0, 0.0}, {0.0, -1.0}, {-1.0, 0.0}, {0.0, 1.0}};  // (-i)^k
  CosineSeries s;
  s.coeffs.reserve(kmax + 1);
  for (int k = 0; k <= kmax; ++k) {
    double jk = bessel_j((double)k, x);
    s.coeffs.push_back((k == 0 ? 1.0 : 2.0) * mi_pow[k % 4] * jk);
  }
  return s;
}

}  // namespace rdft
