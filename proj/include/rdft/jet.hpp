#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

// Truncated Taylor (jet) arithmetic over complex coefficients: a Jet of
// order d carries f(w0), f'(w0), ..., f^(d)(w0)/d! and propagates them
// through arithmetic and the elementary functions by the usual power-series
// recurrences.  Used to take exact w-derivatives of the closed kernel
// forms without finite differencing.

namespace rdft {

class Jet {
 public:
  using C = std::complex<double>;

  Jet(int order, C value) : c_(order + 1, C(0.0)) {
    if (order < 0) throw std::domain_error("Jet: negative order");
    c_[0] = value;
  }

  static Jet variable(int order, double w0) {
    Jet j(order, C(w0));
    if (order >= 1) j.c_[1] = C(1.0);
    return j;
  }

  int order() const { return (int)c_.size() - 1; }
  C coeff(int i) const { return c_[i]; }
  C& coeff(int i) { return c_[i]; }

  // k-th derivative value: coeff(k) * k!
  C derivative(int k) const {
    C v = c_[k];
    for (int i = 2; i <= k; ++i) v *= (double)i;
    return v;
  }

  friend Jet operator+(const Jet& a, const Jet& b) {
    Jet r = a;
    for (int i = 0; i <= r.order(); ++i) r.c_[i] += b.c_[i];
    return r;
  }
  friend Jet operator-(const Jet& a, const Jet& b) {
    Jet r = a;
    for (int i = 0; i <= r.order(); ++i) r.c_[i] -= b.c_[i];
    return r;
  }
  friend Jet operator*(const Jet& a, const Jet& b) {
    Jet r(a.order(), C(0.0));
    for (int n = 0; n <= a.order(); ++n) {
      C s = 0.0;
      for (int j = 0; j <= n; ++j) s += a.c_[j] * b.c_[n - j];
      r.c_[n] = s;
    }
    return r;
  }
  friend Jet operator*(C s, const Jet& a) {
    Jet r = a;
    for (auto& v : r.c_) v *= s;
    return r;
  }
  friend Jet operator+(C s, const Jet& a) {
    Jet r = a;
    r.c_[0] += s;
    return r;
  }
  friend Jet operator-(C s, const Jet& a) {
    Jet r = (-1.0) * a;
    r.c_[0] += s;
    return r;
  }
  friend Jet operator*(double s, const Jet& a) { return C(s) * a; }

 private:
  std::vector<C> c_;
};

// 1/q by the convolution recurrence; q_0 must be nonzero.
inline Jet jet_recip(const Jet& q) {
  if (q.coeff(0) == Jet::C(0.0))
    throw std::domain_error("jet_recip: zero constant term");
  Jet r(q.order(), 1.0 / q.coeff(0));
  for (int n = 1; n <= q.order(); ++n) {
    Jet::C s = 0.0;
    for (int j = 1; j <= n; ++j) s += q.coeff(j) * r.coeff(n - j);
    r.coeff(n) = -s / q.coeff(0);
  }
  return r;
}

// sqrt(p) with the principal branch at the constant term.
inline Jet jet_sqrt(const Jet& p) {
  Jet::C q0 = std::sqrt(p.coeff(0));
  if (q0 == Jet::C(0.0))
    throw std::domain_error("jet_sqrt: zero constant term");
  Jet q(p.order(), q0);
  for (int n = 1; n <= p.order(); ++n) {
    Jet::C s = p.coeff(n);
    for (int j = 1; j < n; ++j) s -= q.coeff(j) * q.coeff(n - j);
    q.coeff(n) = s / (2.0 * q0);
  }
  return q;
}

// exp, sin, cos by the standard ODE recurrences: with u the argument jet,
// n e_n = sum_{j=1..n} j u_j e_{n-j}, and the sin/cos pair coupled.
inline Jet jet_exp(const Jet& u) {
  Jet e(u.order(), std::exp(u.coeff(0)));
  for (int n = 1; n <= u.order(); ++n) {
    Jet::C s = 0.0;
    for (int j = 1; j <= n; ++j)
      s += (double)j * u.coeff(j) * e.coeff(n - j);
    e.coeff(n) = s / (double)n;
  }
  return e;
}

inline void jet_sin_cos(const Jet& u, Jet& s, Jet& c) {
  s = Jet(u.order(), std::sin(u.coeff(0)));
  c = Jet(u.order(), std::cos(u.coeff(0)));
  for (int n = 1; n <= u.order(); ++n) {
    Jet::C as = 0.0, ac = 0.0;
    for (int j = 1; j <= n; ++j) {
      as += (double)j * u.coeff(j) * c.coeff(n - j);
      ac += (double)j * u.coeff(j) * s.coeff(n - j);
    }
    s.coeff(n) = as / (double)n;
    c.coeff(n) = -ac / (double)n;
  }
}

inline Jet jet_cos(const Jet& u) {
  Jet s(u.order(), 0.0), c(u.order(), 0.0);
  jet_sin_cos(u, s, c);
  return c;
}

// arccos(u) for a real constant term strictly inside (-1, 1): integrates
// t' = -u' / sqrt(1 - u^2) coefficient-wise.
inline Jet jet_acos(const Jet& u) {
  double u0 = u.coeff(0).real();
  if (!(std::abs(u0) < 1.0))
    throw std::domain_error("jet_acos: constant term must lie in (-1, 1)");
  Jet t(u.order(), std::acos(u0));
  if (u.order() == 0) return t;
  Jet g = jet_recip(jet_sqrt(1.0 - u * u));  // 1/sqrt(1-u^2)
  // t_{n} = -(1/n) * [u' * g]_{n-1}, with u'_j = (j+1) u_{j+1}
  for (int n = 1; n <= u.order(); ++n) {
    Jet::C s = 0.0;
    for (int j = 0; j <= n - 1; ++j)
      s += (double)(j + 1) * u.coeff(j + 1) * g.coeff(n - 1 - j);
    t.coeff(n) = -s / (double)n;
  }
  return t;
}

}  // namespace rdft
