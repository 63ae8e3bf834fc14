#include "rdft/kernel_series.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "rdft/specfun.hpp"

namespace rdft {
namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Detect a = 2/n for integer n (the closed-form family).  Only exact
// quotients count: 2.0/n reproduces a bit-for-bit or it is not rational.
std::optional<int> detect_rational(double a) {
  for (int n = 1; n <= 64; ++n)
    if (a == 2.0 / n) return n;
  return std::nullopt;
}

// z^k a^{-2k/a} without intermediate overflow, paired with the normalized
// Bessel factor Jt_nu(X).  For exponents too large for one exp() the term
// is assembled from the un-normalized J_nu(X) instead (safe: there z >= 1
// and |J| <= 1, only the small z^{-l} power remains).
double radial_factor(const DeformParams& p, double z, int k, double nu,
                     double X) {
  double lg = k * (std::log(z) - (2.0 / p.a) * std::log(p.a));
  if (std::abs(lg) < 600.0)
    return std::exp(lg) * bessel_j_tilde(nu, X);
  if (lg <= -600.0) return 0.0;
  return std::pow(p.a, 2.0 * p.lambda / p.a) * std::pow(z, -p.lambda) *
         bessel_j(nu, X);
}

}  // namespace

DeformParams::DeformParams(double a_, int m_)
    : a(a_), m(m_), lambda(0.5 * (m_ - 2)), rational_n(detect_rational(a_)) {
  if (!(a > 0.0)) throw std::domain_error("DeformParams: a must be positive");
  if (m < 2) throw std::domain_error("DeformParams: m must be >= 2");
}

KernelArgs::KernelArgs(double z_, double w_) : z(z_), w(w_) {
  if (!(z >= 0.0)) throw std::domain_error("KernelArgs: z must be >= 0");
  if (std::abs(w) > 1.0 + 1e-12)
    throw std::domain_error("KernelArgs: |w| > 1");
  if (w > 1.0) w = 1.0;
  if (w < -1.0) w = -1.0;
  t = std::acos(w);
}

TruncationPolicy::TruncationPolicy(double tol, int terms, int small_run)
    : abs_tol(tol), max_terms(terms), consecutive_small(small_run) {
  if (!(abs_tol >= 1e-15))
    throw std::domain_error("TruncationPolicy: abs_tol below 1e-15");
  if (max_terms < 8)
    throw std::domain_error("TruncationPolicy: max_terms below 8");
  if (consecutive_small < 3)
    throw std::domain_error("TruncationPolicy: consecutive_small below 3");
}

std::complex<double> phase_factor(const DeformParams& p, int k) {
  if (k < 0) throw std::domain_error("phase_factor: negative index");
  if (p.rational_n) {
    static const std::complex<double> table[4] = {
        {1.0, 0.0}, {0.0, -1.0}, {-1.0, 0.0}, {0.0, 1.0}};
    return table[(long long)k * *p.rational_n % 4];
  }
  double r = std::remainder(k / p.a, 2.0);  // e^{-i pi k/a}, |r| <= 1
  return {std::cos(kPi * r), -std::sin(kPi * r)};
}

std::complex<double> series_term(const DeformParams& p, const KernelArgs& args,
                                 int k) {
  if (k < 0) throw std::domain_error("series_term: negative index");
  if (args.z == 0.0) return {k == 0 ? 1.0 : 0.0, 0.0};

  double X = (2.0 / p.a) * std::pow(args.z, 0.5 * p.a);
  double nu = 2.0 * (k + p.lambda) / p.a;
  double radial = radial_factor(p, args.z, k, nu, X);

  double coeff;
  if (p.m == 2) {
    coeff = (k == 0) ? 1.0 : k * gegenbauer_limit(k, args.t);
  } else {
    coeff = gamma_fn((2.0 * p.lambda + p.a) / p.a) *
            ((p.lambda + k) / p.lambda) * gegenbauer(k, p.lambda, args.w);
  }
  return phase_factor(p, k) * (coeff * radial);
}

double term_envelope_log(const DeformParams& p, double z, int k) {
  if (k < 0) throw std::domain_error("term_envelope_log: negative index");
  if (z == 0.0) return k == 0 ? 0.0 : kNegInf;

  double nu = 2.0 * (k + p.lambda) / p.a;
  double lg = k * (std::log(z) - (2.0 / p.a) * std::log(p.a)) -
              log_gamma(nu + 1.0);
  if (p.m == 2) {
    // |2 cos kt| <= 2; the k = 0 coefficient is 1.
    return k == 0 ? lg : lg + std::log(2.0);
  }
  double l = p.lambda;
  double lc = (k == 0) ? 0.0
                       : log_gamma(k + 2.0 * l) - log_gamma(2.0 * l) -
                             log_gamma(k + 1.0);  // C_k^l(1)
  return log_gamma((2.0 * l + p.a) / p.a) + std::log((l + k) / l) + lg + lc;
}

SeriesValue kernel_series(const DeformParams& p, const KernelArgs& args,
                          const TruncationPolicy& policy) {
  const double log_tol = std::log(policy.abs_tol);
  const double turning = std::pow(args.z, 0.5 * p.a);  // nu_k > X boundary

  std::complex<double> sum = 0.0, comp = 0.0;
  int run = 0;
  for (int k = 0; k < policy.max_terms; ++k) {
    std::complex<double> y = series_term(p, args, k) - comp;
    std::complex<double> t = sum + y;
    comp = (t - sum) - y;
    sum = t;

    bool past_turning = k + p.lambda > turning;
    if (past_turning && term_envelope_log(p, args.z, k) < log_tol) {
      if (++run >= policy.consecutive_small)
        return {sum, k + 1, true};
    } else {
      run = 0;
    }
  }
  return {sum, policy.max_terms, false};
}

int required_terms(const DeformParams& p, double z_max, double tol) {
  if (!(z_max >= 0.0))
    throw std::domain_error("required_terms: z_max must be >= 0");
  if (!(tol > 0.0)) throw std::domain_error("required_terms: tol must be > 0");

  const double log_tol = std::log(tol);
  const double turning = std::pow(z_max, 0.5 * p.a);
  const int window = 5;
  const int cap = 200000;

  double env[window];
  for (int k = 0; k + window <= cap; ++k) {
    if (!(k + p.lambda > turning)) continue;
    bool ok = true;
    for (int i = 0; i < window; ++i)
      env[i] = term_envelope_log(p, z_max, k + i);
    for (int i = 0; i < window && ok; ++i) ok = env[i] < log_tol;
    for (int i = 0; i + 1 < window && ok; ++i) ok = env[i + 1] <= env[i];
    if (ok) return k + window;
  }
  throw std::runtime_error("required_terms: no admissible truncation found");
}

}  // namespace rdft
