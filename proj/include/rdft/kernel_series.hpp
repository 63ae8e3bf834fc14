#pragma once

#include <complex>
#include <optional>

// Series evaluation of the deformation-parameter-a Fourier kernel
// K_a^m(z, w), where z = |x||y| >= 0 and w = <x,y>/z in [-1, 1].  The
// expansion is
//
//   K_a^m = Gamma((2l+a)/a) sum_k p^k ((l+k)/l) a^{-2k/a} z^k
//             * Jt_{2(k+l)/a}((2/a) z^{a/2}) * C_k^l(w),
//
// with l = (m-2)/2, p = e^{-i pi/a}, Jt the power-normalized Bessel
// function, and the m = 2 case taken as the l -> 0 limit
// (C_k^l/l -> (2/k) cos(k arccos w)).  Written this way every factor is
// bounded on z <= 1 and the k = 0 term is exactly 1 at z = 0.

namespace rdft {

struct DeformParams {
  double a;        // deformation parameter, > 0
  int m;           // dimension, >= 2
  double lambda;   // (m-2)/2, stored to keep the two in sync
  std::optional<int> rational_n;  // set when a == 2/n exactly

  DeformParams(double a_, int m_);
};

struct KernelArgs {
  double z;  // radial product, >= 0
  double w;  // cosine of the angle, clamped into [-1, 1]
  double t;  // arccos(w)

  KernelArgs(double z_, double w_);
};

struct TruncationPolicy {
  double abs_tol = 1e-12;
  int max_terms = 512;
  int consecutive_small = 3;

  TruncationPolicy() = default;
  TruncationPolicy(double tol, int terms, int small_run);
};

struct SeriesValue {
  std::complex<double> value;
  int terms_used = 0;
  bool converged = false;
};

// e^{-i pi k / a}.  For a = 2/n this is a fourth root of unity and is
// returned exactly from a table indexed by (k n) mod 4.
std::complex<double> phase_factor(const DeformParams& p, int k);

// Single term of the expansion above (the k = 0 term at z = 0 is exactly 1).
std::complex<double> series_term(const DeformParams& p, const KernelArgs& args,
                                 int k);

// log of a rigorous bound on |series_term|, from |Jt_nu(x)| <= 1/Gamma(nu+1)
// and |C_k^l(w)| <= C_k^l(1).  -inf when the term vanishes identically.
double term_envelope_log(const DeformParams& p, double z, int k);

// Partial sums with envelope-driven truncation: stop after
// `consecutive_small` successive terms whose envelope is below abs_tol,
// counted only once the term order has passed the Bessel turning point
// (k + l > z^{a/2}), past which the envelopes decay for good.
SeriesValue kernel_series(const DeformParams& p, const KernelArgs& args,
                          const TruncationPolicy& policy);

// Smallest truncation order whose tail envelope stays below tol for every
// z <= z_max (envelopes increase in z, so the scan at z_max dominates).
int required_terms(const DeformParams& p, double z_max, double tol);

}  // namespace rdft
