#include "rdft/kernel_closed.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "rdft/jet.hpp"
#include "rdft/specfun.hpp"

namespace rdft {
namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

std::complex<double> i_power(long long r) {  // i^r, exact
  static const std::complex<double> table[4] = {
      {1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
  return table[((r % 4) + 4) % 4];
}

// e^{i pi / a}; exact fourth root of unity for a = 2/n.
std::complex<double> exp_i_pi_over_a(const DeformParams& p) {
  if (p.rational_n) return i_power(*p.rational_n);
  double r = std::remainder(1.0 / p.a, 2.0);
  return {std::cos(kPi * r), std::sin(kPi * r)};
}

// Radial factor of the s-times-differentiated series term:
// a^{-2k/a} z^{k-s} Jt_nu(X), assembled like the base series to avoid
// intermediate overflow.
double radial_step(const DeformParams& p, double z, int k, int s, double nu,
                   double X) {
  if (z == 0.0)
    return k == s ? std::exp(-(2.0 * k / p.a) * std::log(p.a)) /
                        gamma_fn(nu + 1.0)
                  : 0.0;
  double lg = (k - s) * std::log(z) - (2.0 * k / p.a) * std::log(p.a);
  if (std::abs(lg) < 600.0) return std::exp(lg) * bessel_j_tilde(nu, X);
  if (lg <= -600.0) return 0.0;
  return std::pow(p.a, 2.0 * p.lambda / p.a) *
         std::pow(z, -p.lambda - s) * bessel_j(nu, X);
}

}  // namespace

const char* method_name(KernelMethod m) {
  switch (m) {
    case KernelMethod::ClosedA2: return "closed-a2";
    case KernelMethod::ClosedA1: return "closed-a1";
    case KernelMethod::ClosedDim2: return "closed-dim2";
    case KernelMethod::ClosedEvenJet: return "closed-even-jet";
    case KernelMethod::Series: return "series";
  }
  return "unknown";
}

std::complex<double> kernel_a2(const KernelArgs& args) {
  double zw = args.z * args.w;
  return {std::cos(zw), -std::sin(zw)};
}

double kernel_a1(int m, const KernelArgs& args) {
  if (m < 2) throw std::domain_error("kernel_a1: m must be >= 2");
  double x = std::sqrt(2.0 * args.z * (1.0 + args.w));
  // Half-integer orders reduce to trig; the m = 2 and m = 4 cases are hot
  // inside the quadrature loops, so they skip the generic Bessel path.
  if (m == 2) return std::cos(x);  // Gamma(1/2) Jt_{-1/2}(x)
  if (m == 4)
    return x < 1e-8 ? 1.0 - x * x / 6.0 : std::sin(x) / x;  // Gamma(3/2) Jt_{1/2}(x)
  return gamma_fn(0.5 * (m - 1)) * bessel_j_tilde(0.5 * (m - 3), x);
}

std::complex<double> kernel_dim2_closed(int n, const KernelArgs& args) {
  if (n < 1) throw std::domain_error("kernel_dim2_closed: n must be >= 1");
  double X = n * std::pow(args.z, 1.0 / n);
  double re = 0.0, im = 0.0;
  for (int l = 0; l < n; ++l) {
    double arg = X * std::cos((args.t + 2.0 * kPi * l) / n);
    re += std::cos(arg);
    im -= std::sin(arg);
  }
  return {re / n, im / n};
}

std::complex<double> kernel_dim2_parity(int n, const KernelArgs& args) {
  if (n < 1) throw std::domain_error("kernel_dim2_parity: n must be >= 1");
  double X = n * std::pow(args.z, 1.0 / n);
  double A = X * std::cos(args.t / n);
  double B = X * std::sin(args.t / n);

  if (n % 2 == 0) {
    // Terms l and l+n/2 are conjugate; regrouping the remaining half-range
    // by l <-> n/2 - l kills the mixed sin*sin part as well.
    int h = n / 2;
    double re = 0.0;
    for (int l = 0; l < h; ++l) {
      double c = std::cos(2.0 * kPi * l / n);
      double s = std::sin(2.0 * kPi * l / n);
      re += std::cos(A * c) * std::cos(B * s);
    }
    return {re / h, 0.0};
  }

  // Odd n: l = 0 stays, l <-> n - l pair into cosine-weighted terms.
  int h = (n - 1) / 2;
  double re = std::cos(A);
  double im = -std::sin(A);
  for (int l = 1; l <= h; ++l) {
    double c = std::cos(2.0 * kPi * l / n);
    double s = std::sin(2.0 * kPi * l / n);
    re += 2.0 * std::cos(A * c) * std::cos(B * s);
    im -= 2.0 * std::sin(A * c) * std::cos(B * s);
  }
  return {re / n, im / n};
}

SeriesValue dim_step_series(const DeformParams& p, const KernelArgs& args,
                            const TruncationPolicy& policy, int steps) {
  if (steps < 1) throw std::domain_error("dim_step_series: steps must be >= 1");
  const double a = p.a;
  const double l = p.lambda;
  const int s = steps;

  // Recursion prefactor, one factor per dimension step, as stated:
  // e^{i pi/a} a^{2/a} Gamma((2l_i+a+2)/a) / (2 (l_i+1) Gamma((2l_i+a)/a)).
  std::complex<double> pref = 1.0;
  for (int i = 0; i < s; ++i) {
    double li = l + i;
    pref *= exp_i_pi_over_a(p) * std::pow(a, 2.0 / a) *
            gamma_fn((2.0 * li + a + 2.0) / a) /
            (2.0 * (li + 1.0) * gamma_fn((2.0 * li + a) / a));
  }

  // Derivative chain on the Gegenbauer factor: each step multiplies by
  // 2 l_i and shifts C_k^{l_i} -> C_{k-1}^{l_i + 1}.  In dimension 2 the
  // first step acts on 2 cos(kt) and yields 2k C_{k-1}^1.
  const double base_gamma = (p.m == 2) ? 1.0 : gamma_fn((2.0 * l + a) / a);
  double chain = 1.0;  // product of the 2 l_i factors that do not vanish
  for (int i = (p.m == 2 ? 1 : 0); i < s; ++i) chain *= 2.0 * (l + i);

  const double X = (2.0 / a) * std::pow(args.z, 0.5 * a);
  const double turning = std::pow(args.z, 0.5 * a);
  const double log_tol = std::log(policy.abs_tol);
  const double log_pref =
      std::log(std::abs(pref)) + std::log(base_gamma) +
      (chain > 0 ? std::log(chain) : 0.0);

  std::complex<double> sum = 0.0, comp = 0.0;
  int run = 0;
  for (int k = s; k < policy.max_terms; ++k) {
    double nu = 2.0 * (k + l) / a;
    double coeff;
    if (p.m == 2) {
      coeff = 2.0 * k * chain * gegenbauer(k - s, (double)s, args.w);
    } else {
      coeff = base_gamma * ((l + k) / l) * chain *
              gegenbauer(k - s, l + s, args.w);
    }
    std::complex<double> term =
        phase_factor(p, k) * (coeff * radial_step(p, args.z, k, s, nu, X));
    std::complex<double> y = term - comp;
    std::complex<double> t = sum + y;
    comp = (t - sum) - y;
    sum = t;

    // Envelope of the differentiated term, same structure as the base
    // series but with C_{k-s}^{l+s}(1) and the z^{k-s} power.
    bool small = false;
    if (k + l > turning) {
      double lam = (p.m == 2) ? (double)s : l + s;
      double lc = (k == s) ? 0.0
                           : log_gamma(k - s + 2.0 * lam) -
                                 log_gamma(2.0 * lam) - log_gamma(k - s + 1.0);
      double lcoef = (p.m == 2) ? std::log(2.0 * k)
                                : std::log((l + k) / l);
      double lg = (args.z == 0.0 && k == s)
                      ? -(2.0 * k / a) * std::log(a)
                      : (args.z == 0.0
                             ? -std::numeric_limits<double>::infinity()
                             : (k - s) * std::log(args.z) -
                                   (2.0 * k / a) * std::log(a));
      double env =
          log_pref + lcoef + lc + lg - log_gamma(nu + 1.0);
      small = env < log_tol;
    }
    if (small) {
      if (++run >= policy.consecutive_small)
        return {pref * sum, k + 1, true};
    } else {
      run = 0;
    }
  }
  return {pref * sum, policy.max_terms, false};
}

std::complex<double> kernel_even_dim(int n, int k, const KernelArgs& args) {
  if (n < 1) throw std::domain_error("kernel_even_dim: n must be >= 1");
  if (k < 1) throw std::domain_error("kernel_even_dim: k must be >= 1");
  if (k == 1) return kernel_dim2_closed(n, args);
  if (args.z == 0.0) return {1.0, 0.0};
  if (args.z < kJetZGuard)
    throw std::domain_error("kernel_even_dim: z below jet guard");
  if (std::abs(args.w) > 1.0 - kJetGuard)
    throw std::domain_error("kernel_even_dim: w too close to +-1");

  const int d = k - 1;  // derivative order
  const double X = n * std::pow(args.z, 1.0 / n);

  Jet u = Jet::variable(d, args.w);
  Jet tj = jet_acos(u);
  Jet acc(d, 0.0);
  for (int l = 0; l < n; ++l) {
    Jet ang = (1.0 / n) * (std::complex<double>(2.0 * kPi * l) + tj);
    Jet sj(d, 0.0), cj(d, 0.0);
    jet_sin_cos(X * jet_cos(ang), sj, cj);
    acc = acc + cj - std::complex<double>(0.0, 1.0) * sj;  // e^{-iX cos}
  }
  Jet g = (1.0 / n) * acc;

  long long nd = (long long)n * d;
  std::complex<double> pref = i_power(nd) * std::pow(2.0 / n, (double)nd) *
                              gamma_fn((double)nd + 1.0) /
                              (std::pow(2.0, d) * gamma_fn((double)d + 1.0));
  return pref * std::pow(args.z, (double)-d) * g.derivative(d);
}

DispatchValue kernel_dispatch(const DeformParams& p, const KernelArgs& args,
                              const TruncationPolicy& policy) {
  DispatchValue r;
  if (p.rational_n == 1) {
    r.value = kernel_a2(args);
    r.method = KernelMethod::ClosedA2;
  } else if (p.rational_n == 2) {
    r.value = kernel_a1(p.m, args);
    r.method = KernelMethod::ClosedA1;
  } else if (p.rational_n && p.m == 2) {
    r.value = kernel_dim2_closed(*p.rational_n, args);
    r.method = KernelMethod::ClosedDim2;
  } else if (p.rational_n && p.m % 2 == 0 &&
             std::abs(args.w) <= 1.0 - kJetGuard &&
             (args.z == 0.0 || args.z >= kJetZGuard)) {
    r.value = kernel_even_dim(*p.rational_n, p.m / 2, args);
    r.method = KernelMethod::ClosedEvenJet;
  } else {
    SeriesValue s = kernel_series(p, args, policy);
    r.value = s.value;
    r.method = KernelMethod::Series;
    r.terms_used = s.terms_used;
    r.converged = s.converged;
  }
  return r;
}

}  // namespace rdft
