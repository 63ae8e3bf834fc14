#pragma once

#include <vector>

// Scalar special functions used by the kernel evaluators: Bessel J of real
// order, its power-normalized variant, Gegenbauer and Laguerre polynomials,
// and the Gamma function.  Everything is double precision with relative
// accuracy near 1e-13 on the parameter ranges the kernels actually use
// (order <= ~300, argument <= ~400).

namespace rdft {

// Gamma(x) for real x, poles excluded.  Lanczos approximation (g = 7, 9
// terms), reflection formula for x < 0.5.  Throws std::domain_error at
// non-positive integers.
double gamma_fn(double x);

// log Gamma(x) for x > 0.  Same Lanczos core, evaluated in log form so it
// stays finite long after gamma_fn overflows.
double log_gamma(double x);

// Bessel function of the first kind J_nu(x) for nu >= -0.5, x >= 0.
// Ascending series when x <= 12 or nu >= 2x (no cancellation there);
// otherwise Miller backward recurrence with the even-order normalization
// sum.  Throws std::domain_error outside the supported domain.
double bessel_j(double nu, double x);

// (x/2)^{-nu} J_nu(x): the entire-in-x part of J with the leading power
// stripped.  Finite and smooth at x = 0 where it equals 1/Gamma(nu+1).
// Bounded by 1/Gamma(nu+1) for all x, which makes it the right building
// block for series whose z -> 0 behavior must be exact.
double bessel_j_tilde(double nu, double x);

// Gegenbauer polynomial C_k^lambda(w), lambda > 0, |w| <= 1, by the
// three-term recurrence.  Throws std::domain_error on bad lambda or w.
double gegenbauer(int k, double lambda, double w);

// All of C_0..C_kmax in one recurrence pass (cheaper inside series loops).
std::vector<double> gegenbauer_all(int kmax, double lambda, double w);

// lim_{lambda->0} C_k^lambda(cos t) / lambda = (2/k) cos(k t) for k >= 1.
// The k = 0 limit is taken as 1 by convention (C_0 = 1 identically).
double gegenbauer_limit(int k, double t);

// Generalized Laguerre polynomial L_j^alpha(u), alpha > -1, u >= 0.
double laguerre(int j, double alpha, double u);

}  // namespace rdft
