#include "rdft/verify.hpp"

#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>

#include "rdft/cosine_series.hpp"
#include "rdft/kernel_closed.hpp"
#include "rdft/kernel_series.hpp"
#include "rdft/specfun.hpp"
#include "rdft/transform.hpp"

namespace rdft {
namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

void add(std::vector<CheckResult>& out, const std::string& name,
         double residual, double threshold) {
  out.push_back({name, residual, threshold, residual <= threshold});
}

// Explicit Laguerre sum in extended precision, used as the oracle.
double laguerre_sum(int j, double alpha, double u) {
  // explicit alternating power series; term ratios kept exact in long double
  long double term = expl(lgammal(j + alpha + 1.0L) -
                          lgammal(alpha + 1.0L) - lgammal(j + 1.0L));
  long double acc = term;
  for (int i = 0; i < j; ++i) {
    term *= -(long double)(j - i) * u /
            ((alpha + i + 1.0L) * (i + 1.0L));
    acc += term;
  }
  return (double)acc;
}

}  // namespace

std::vector<CheckResult> suite_specfun() {
  std::vector<CheckResult> out;

  {  // three-term recurrence ties the ascending and Miller regimes together
    const double nus[] = {0.5, 1.0, 1.7, 2.5, 3.0, 5.0, 7.3,
                          10.0, 15.5, 22.0, 30.0, 41.0, 50.0};
    const double xs[] = {0.3, 1.0, 2.8, 5.0, 8.4, 11.9, 13.0,
                         17.0, 21.0, 26.5, 33.0, 41.0, 50.0};
    double worst = 0.0;
    for (double nu : nus)
      for (double x : xs) {
        double jm = bessel_j(nu - 1.0, x);
        double j0 = bessel_j(nu, x);
        double jp = bessel_j(nu + 1.0, x);
        double r = std::abs(jm + jp - (2.0 * nu / x) * j0) /
                   std::max(1.0, std::abs(j0));
        worst = std::max(worst, r);
      }
    add(out, "bessel-recurrence", worst, 1e-10);
  }

  {  // Jt against the power-scaled J where the two take different paths
    double worst = 0.0;
    for (double nu : {0.0, 0.5, 1.25, 3.3, 7.0, 10.5})
      for (double x : {0.7, 2.0, 5.0, 9.5, 11.8}) {
        double a = bessel_j_tilde(nu, x);
        double b = std::pow(0.5 * x, -nu) * bessel_j(nu, x);
        worst = std::max(worst, std::abs(a - b) /
                                    std::max(std::abs(a), 1e-280));
      }
    add(out, "bessel-tilde-consistency", worst, 1e-12);
  }

  {  // the envelope |Jt_nu| <= 1/Gamma(nu+1) that justifies truncation
    double worst = 0.0;
    for (double nu : {0.0, 0.5, 1.5, 4.0, 9.0, 17.5, 33.0})
      for (double x : {0.5, 3.0, 11.0, 19.0, 37.0, 80.0}) {
        double excess =
            std::abs(bessel_j_tilde(nu, x)) * gamma_fn(nu + 1.0) - 1.0;
        worst = std::max(worst, excess);
      }
    add(out, "bessel-envelope", worst, 1e-12);
  }

  {  // d/dw C_k^l = 2l C_{k-1}^{l+1} against a central difference
    const double h = 1e-6;
    double worst = 0.0;
    for (double l : {0.5, 1.5, 3.25})
      for (int k = 1; k <= 8; ++k)
        for (double w : {-0.8, -0.3, 0.2, 0.7}) {
          double exact = 2.0 * l * gegenbauer(k - 1, l + 1.0, w);
          double fd =
              (gegenbauer(k, l, w + h) - gegenbauer(k, l, w - h)) / (2.0 * h);
          worst = std::max(worst,
                           std::abs(exact - fd) / std::max(1.0, std::abs(exact)));
        }
    add(out, "gegenbauer-derivative", worst, 1e-6);
  }

  {  // C_k^l / l -> (2/k) cos(kt) as l -> 0
    const double l = 1e-7;
    double worst = 0.0;
    for (int k = 1; k <= 8; ++k)
      for (double t : {0.4, 1.3, 2.6}) {
        double lim = gegenbauer(k, l, std::cos(t)) / l;
        worst = std::max(worst, std::abs(lim - gegenbauer_limit(k, t)));
      }
    add(out, "gegenbauer-zero-lambda-limit", worst, 1e-5);
  }

  {  // recurrence Laguerre against the explicit alternating sum
    double worst = 0.0;
    for (int j = 0; j <= 10; ++j)
      for (double alpha : {0.0, 0.5, 2.25})
        for (double u : {0.3, 1.7, 6.4}) {
          double a = laguerre(j, alpha, u);
          double b = laguerre_sum(j, alpha, u);
          worst = std::max(worst,
                           std::abs(a - b) / std::max(1.0, std::abs(b)));
        }
    add(out, "laguerre-series", worst, 1e-10);
  }

  {  // Gamma(x+1) = x Gamma(x)
    double worst = 0.0;
    for (double x = 0.1; x <= 30.0; x += 0.7) {
      double r = std::abs(gamma_fn(x + 1.0) - x * gamma_fn(x)) /
                 gamma_fn(x + 1.0);
      worst = std::max(worst, r);
    }
    add(out, "gamma-functional-equation", worst, 1e-12);
  }

  {  // pinned values
    double worst = std::abs(gamma_fn(0.5) - std::sqrt(kPi)) / std::sqrt(kPi);
    worst = std::max(worst, std::abs(gamma_fn(1.5) - 0.5 * std::sqrt(kPi)) /
                                (0.5 * std::sqrt(kPi)));
    worst = std::max(worst, std::abs(gamma_fn(5.0) - 24.0) / 24.0);
    add(out, "gamma-known-values", worst, 1e-13);
  }

  {  // log_gamma against log of gamma_fn below overflow
    double worst = 0.0;
    for (double x : {0.7, 1.0, 3.3, 20.0, 50.0, 140.0}) {
      double a = log_gamma(x);
      double b = std::log(gamma_fn(x));
      worst = std::max(worst, std::abs(a - b) / std::max(1.0, std::abs(b)));
    }
    add(out, "log-gamma-consistency", worst, 1e-12);
  }

  return out;
}

std::vector<CheckResult> suite_kernel() {
  std::vector<CheckResult> out;
  const TruncationPolicy tight(1e-13, 600, 3);

  {  // a = 2 collapses to the plane wave for every dimension
    double worst = 0.0;
    for (int m : {2, 3, 4}) {
      DeformParams p(2.0, m);
      for (double z : {0.0, 1.0, 4.5, 11.0})
        for (double w : {-1.0, -0.4, 0.3, 1.0}) {
          KernelArgs args(z, w);
          std::complex<double> ref(std::cos(z * w), -std::sin(z * w));
          SeriesValue s = kernel_series(p, args, tight);
          worst = std::max(worst, std::abs(s.value - ref));
        }
    }
    add(out, "series-plane-wave-a2", worst, 1e-10);
  }

  {  // phase factors snap to the exact fourth roots of unity for a = 2/n
    double worst = 0.0;
    for (int n = 1; n <= 8; ++n) {
      DeformParams p(2.0 / n, 2);
      for (int k = 0; k <= 100; ++k) {
        static const std::complex<double> roots[4] = {
            {1, 0}, {0, -1}, {-1, 0}, {0, 1}};
        std::complex<double> want = roots[(k * n) % 4];
        worst = std::max(worst, std::abs(phase_factor(p, k) - want));
      }
    }
    add(out, "phase-pattern-rational", worst, 0.0);
  }

  {  // conj K_2^m(z,w) = e^{+izw}
    DeformParams p(2.0, 3);
    double worst = 0.0;
    for (double z : {0.5, 3.0, 9.0})
      for (double w : {-0.9, 0.0, 0.6}) {
        SeriesValue s = kernel_series(p, KernelArgs(z, w), tight);
        std::complex<double> ref(std::cos(z * w), std::sin(z * w));
        worst = std::max(worst, std::abs(std::conj(s.value) - ref));
      }
    add(out, "hermitian-symmetry-a2", worst, 1e-10);
  }

  {  // K(0, w) = 1 exactly, any a, m, w
    double worst = 0.0;
    for (double a : {2.0, 1.0, 0.77})
      for (int m : {2, 3, 6}) {
        DeformParams p(a, m);
        SeriesValue s = kernel_series(p, KernelArgs(0.0, 0.35), tight);
        worst = std::max(worst, std::abs(s.value - 1.0));
      }
    add(out, "z-zero-normalization", worst, 0.0);
  }

  {  // series against the finite exponential sum, a = 2/3
    DeformParams p(2.0 / 3.0, 2);
    double worst = 0.0;
    for (double z : {0.3, 2.0, 8.0, 19.0})
      for (double w : {-0.9, 0.1, 0.8}) {
        KernelArgs args(z, w);
        SeriesValue s = kernel_series(p, args, tight);
        worst = std::max(worst, std::abs(s.value - kernel_dim2_closed(3, args)));
      }
    add(out, "series-vs-closed-n3", worst, 1e-10);
  }

  {  // series against the Bessel closed form at a = 1, odd dimensions
    double worst = 0.0;
    for (int m : {3, 5}) {
      DeformParams p(1.0, m);
      for (double z : {0.4, 2.5, 9.0})
        for (double w : {-0.7, 0.2, 0.95}) {
          KernelArgs args(z, w);
          SeriesValue s = kernel_series(p, args, tight);
          worst = std::max(worst, std::abs(s.value - kernel_a1(m, args)));
        }
    }
    add(out, "series-vs-closed-a1", worst, 1e-10);
  }

  {  // loose truncation stays within a small multiple of its tolerance
    const TruncationPolicy loose(1e-6, 600, 3);
    double worst = 0.0;
    for (double a : {2.0, 2.0 / 3.0, 0.8})
      for (int m : {2, 4}) {
        DeformParams p(a, m);
        for (double z : {1.0, 6.0, 10.0})
          for (double w : {-0.5, 0.75}) {
            KernelArgs args(z, w);
            std::complex<double> kl = kernel_series(p, args, loose).value;
            std::complex<double> kt = kernel_series(p, args, tight).value;
            worst = std::max(worst, std::abs(kl - kt));
          }
      }
    add(out, "truncation-honesty", worst, 2e-5);
  }

  {  // every term past required_terms sits below the requested tolerance
    double worst = 0.0;
    for (double a : {2.0, 2.0 / 3.0})
      for (int m : {2, 5}) {
        DeformParams p(a, m);
        int kstar = required_terms(p, 10.0, 1e-9);
        for (double z : {10.0, 7.5, 3.0}) {
          KernelArgs args(z, 0.6);
          for (int k = kstar; k < kstar + 40; ++k)
            worst = std::max(worst, std::abs(series_term(p, args, k)));
        }
      }
    add(out, "required-terms-tail", worst, 1e-9);
  }

  {  // |K_{2/n}^2| <= 1
    double worst = 0.0;
    for (int n = 1; n <= 8; ++n) {
      for (int iz = 0; iz <= 60; ++iz)
        for (int iw = 0; iw <= 40; ++iw) {
          KernelArgs args(30.0 * iz / 60.0, -1.0 + 2.0 * iw / 40.0);
          worst = std::max(worst, std::abs(kernel_dim2_closed(n, args)) - 1.0);
        }
    }
    add(out, "dim2-kernel-bounded", worst, 1e-12);
  }

  {  // dispatch agrees with the raw series on every route
    double worst = 0.0;
    for (double a : {2.0, 1.0, 2.0 / 3.0})
      for (int m : {2, 4}) {
        DeformParams p(a, m);
        for (double z : {0.0, 0.7, 5.0})
          for (double w : {-0.6, 0.45}) {
            KernelArgs args(z, w);
            DispatchValue d = kernel_dispatch(p, args, tight);
            SeriesValue s = kernel_series(p, args, tight);
            worst = std::max(worst, std::abs(d.value - s.value));
          }
      }
    add(out, "dispatch-consistency", worst, 1e-9);
  }

  return out;
}

std::vector<CheckResult> suite_downsample() {
  std::vector<CheckResult> out;
  std::mt19937 rng(20260815);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);

  auto random_series = [&](int len) {
    CosineSeries s;
    double scale = 1.0;
    for (int k = 0; k < len; ++k) {
      s.coeffs.push_back(std::complex<double>(unif(rng), unif(rng)) * scale);
      scale *= 0.5;
    }
    return s;
  };

  {  // coefficient selection == shifted-argument average
    double worst = 0.0;
    for (int trial = 0; trial < 60; ++trial) {
      int n = 1 + trial % 8;
      CosineSeries s = random_series(8 + trial % 40);
      CosineSeries g = downsample_coeffs(s, n);
      for (int it = 0; it < 16; ++it) {
        double t = 2.0 * kPi * it / 16.0 + 0.05;
        worst = std::max(worst, std::abs(eval_series(g, t) -
                                         downsample_by_shifts(s, n, t)));
      }
    }
    add(out, "downsample-shift-average", worst, 1e-12);
  }

  {  // downsample by n then m == downsample by n m
    double worst = 0.0;
    const std::pair<int, int> combos[] = {{2, 2}, {2, 3}, {3, 2}, {2, 4}, {4, 2}};
    for (auto [n, m] : combos) {
      CosineSeries s = random_series(49);
      CosineSeries g1 = downsample_coeffs(downsample_coeffs(s, n), m);
      CosineSeries g2 = downsample_coeffs(s, n * m);
      for (size_t k = 0; k < std::min(g1.coeffs.size(), g2.coeffs.size()); ++k)
        worst = std::max(worst, std::abs(g1.coeffs[k] - g2.coeffs[k]));
      for (int it = 0; it < 8; ++it) {
        double t = 2.0 * kPi * it / 8.0 + 0.11;
        worst = std::max(worst, std::abs(eval_series(g1, t) -
                                         downsample_by_shifts(s, n * m, t)));
      }
    }
    add(out, "downsample-composition", worst, 1e-12);
  }

  {  // Jacobi-Anger partial sums reproduce the plane wave
    double worst = 0.0;
    for (double x : {0.7, 3.0, 9.0}) {
      CosineSeries s = jacobi_anger_coeffs(x, 40);
      for (double t : {0.3, 1.4, 2.8, 5.1}) {
        std::complex<double> ref(std::cos(x * std::cos(t)),
                                 -std::sin(x * std::cos(t)));
        worst = std::max(worst, std::abs(eval_series(s, t) - ref));
      }
    }
    add(out, "jacobi-anger-partial-sum", worst, 1e-13);
  }

  {  // downsampling the plane-wave series gives the a = 2/n kernel
    double worst = 0.0;
    for (int n : {2, 3, 5})
      for (double z : {0.8, 5.0}) {
        double X = n * std::pow(z, 1.0 / n);
        CosineSeries g = downsample_coeffs(jacobi_anger_coeffs(X, 64), n);
        for (int it = 0; it < 12; ++it) {
          double t = kPi * it / 11.0;
          KernelArgs args(z, std::cos(t));
          worst = std::max(worst, std::abs(eval_series(g, t) -
                                           kernel_dim2_closed(n, args)));
        }
      }
    add(out, "downsample-kernel-replay", worst, 1e-12);
  }

  return out;
}

std::vector<CheckResult> suite_transform() {
  std::vector<CheckResult> out;

  {  // weighted polynomial moments against a^{p/a} Gamma(p/a + 1)
    double worst = 0.0;
    for (double a : {2.0, 1.0, 2.0 / 3.0}) {
      DeformParams p(a, 2);
      QuadSpec q = build_quadrature(p, 20, 16);
      worst = std::max(worst, quadrature_moment_error(p, q, 40));
    }
    add(out, "quadrature-moments", worst, 1e-10);
  }

  {  // eigenvalue phases land exactly on fourth roots of unity for a = 2/n
    double worst = 0.0;
    static const std::complex<double> roots[4] = {
        {1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    for (int n : {1, 2, 3, 4, 6}) {
      DeformParams p(2.0 / n, 2);
      for (int j = 0; j <= 3; ++j)
        for (int k = 0; k <= 3; ++k) {
          std::complex<double> e =
              eigenvalue_phase(p, EigenIndex(j, k, Harmonic::Cos));
          double best = 1e300;
          for (auto r : roots) best = std::min(best, std::abs(e - r));
          worst = std::max(worst, best);
        }
    }
    add(out, "eigenvalue-phase-snap", worst, 0.0);
  }

  {  // one eigenrelation spot check on the hardest deformation
    DeformParams p(2.0 / 3.0, 2);
    QuadSpec q = build_quadrature(p, 20, 64);
    std::vector<std::pair<double, double>> samples = {
        {0.5, 0.3}, {1.2, 1.7}, {2.0, 3.9}, {3.0, 2.4}};
    double r =
        verify_eigenrelation(p, EigenIndex(1, 1, Harmonic::Cos), q, samples);
    add(out, "eigenrelation-spot", r, 1e-5);
  }

  {  // Hankel-Laguerre self-reciprocity
    double worst = 0.0;
    for (int j : {0, 2, 5})
      for (double alpha : {0.0, 0.5, 2.0})
        for (double s : {0.5, 2.0})
          worst = std::max(worst, hankel_laguerre_check(j, alpha, s));
    add(out, "hankel-laguerre", worst, 1e-8);
  }

  {  // spherical reproducing kernel, m = 2 and 3
    double worst = 0.0;
    for (int m : {2, 3})
      for (int k = 0; k <= 3; ++k)
        for (int l = 0; l <= 3; ++l)
          worst = std::max(worst, reproducing_kernel_check(k, l, m));
    add(out, "reproducing-kernel", worst, 1e-10);
  }

  {  // norm preservation through the quadrature transform
    double worst = 0.0;
    for (double a : {2.0, 1.0, 2.0 / 3.0}) {
      DeformParams p(a, 2);
      worst = std::max(worst, unitarity_check(p, 12, 8, 64));
    }
    add(out, "unitarity", worst, 1e-6);
  }

  {  // orthogonality of the eigenbasis under the quadrature rule
    double worst = 0.0;
    for (double a : {2.0, 2.0 / 3.0}) {
      DeformParams p(a, 2);
      QuadSpec q = build_quadrature(p, 16, 48, 30);
      worst = std::max(worst, gram_check(p, q, 2));
    }
    add(out, "gram-orthogonality", worst, 1e-8);
  }

  return out;
}

std::vector<CheckResult> run_suite(const std::string& name) {
  if (name == "specfun") return suite_specfun();
  if (name == "kernel") return suite_kernel();
  if (name == "downsample") return suite_downsample();
  if (name == "transform") return suite_transform();
  if (name == "all") {
    std::vector<CheckResult> all;
    for (const char* s : {"specfun", "kernel", "downsample", "transform"}) {
      auto part = run_suite(s);
      all.insert(all.end(), part.begin(), part.end());
    }
    return all;
  }
  throw std::invalid_argument("run_suite: unknown suite '" + name + "'");
}

}  // namespace rdft
