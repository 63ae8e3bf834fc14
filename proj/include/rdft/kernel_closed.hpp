#pragma once

#include <complex>

#include "rdft/kernel_series.hpp"

// Closed evaluations of the deformed kernel and the dimension recursion.
//
//   a = 2:           K_2^m(z, w) = e^{-izw} for every m
//   a = 1:           K_1^m(z, w) = Gamma((m-1)/2) Jt_{(m-3)/2}(sqrt(2z(1+w)))
//   a = 2/n, m = 2:  K_{2/n}^2(z, w) = (1/n) sum_l exp(-i n z^{1/n}
//                                       cos((t + 2 pi l)/n)),  t = arccos w
//   a = 2/n, m = 2k: prefactor * z^{-k+1} * d^{k-1}/dw^{k-1} of the m = 2
//                    closed form (derivatives taken with jet arithmetic)
//
// plus the recursion K_a^{m+2} = c(a, m) z^{-1} d/dw K_a^m applied
// term-wise to the series.

namespace rdft {

// Relative distance from |w| = 1 below which the jet-based even-dimension
// evaluator refuses to run (arccos loses smoothness at the endpoints).
constexpr double kJetGuard = 1e-3;

// Smallest z the jet evaluator accepts: the z^{-k+1} prefactor amplifies
// coefficient roundoff like z^{1-k}, so tiny z is delegated to the series.
constexpr double kJetZGuard = 1e-3;

std::complex<double> kernel_a2(const KernelArgs& args);

// Real-valued closed form at a = 1 (any m >= 2).
double kernel_a1(int m, const KernelArgs& args);

// Finite exponential sum for a = 2/n in dimension 2.
std::complex<double> kernel_dim2_closed(int n, const KernelArgs& args);

// Same value, rewritten by pairing the indices l and n - l so the real and
// imaginary parts are separately explicit: for even n the imaginary part
// cancels identically (returned as exact 0), for odd n only the single
// unpaired term and cosine-weighted pairs remain.
std::complex<double> kernel_dim2_parity(int n, const KernelArgs& args);

// K_a^{m + 2 steps}(z, w) obtained from the dimension-m series by the
// term-wise w-derivative recursion (d/dw C_k^l = 2l C_{k-1}^{l+1}).
SeriesValue dim_step_series(const DeformParams& p, const KernelArgs& args,
                            const TruncationPolicy& policy, int steps = 1);

// Even dimensions m = 2k at a = 2/n: jet differentiation of the dimension-2
// closed form.  Requires |w| <= 1 - kJetGuard and z >= kJetZGuard when
// k >= 2 (z = 0 returns the exact limit 1).
std::complex<double> kernel_even_dim(int n, int k, const KernelArgs& args);

enum class KernelMethod { ClosedA2, ClosedA1, ClosedDim2, ClosedEvenJet, Series };

const char* method_name(KernelMethod m);

struct DispatchValue {
  std::complex<double> value;
  KernelMethod method = KernelMethod::Series;
  int terms_used = 0;   // 0 for closed forms
  bool converged = true;
};

// Route to the cheapest applicable evaluator: a = 2 and a = 1 always have
// closed forms; a = 2/n has one in dimension 2 and, away from the jet
// guards, in all even dimensions; everything else falls back to the series.
DispatchValue kernel_dispatch(const DeformParams& p, const KernelArgs& args,
                              const TruncationPolicy& policy);

}  // namespace rdft
