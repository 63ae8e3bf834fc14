#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>
#include <vector>

#include "rdft/jet.hpp"

using namespace rdft;
using cplx = std::complex<double>;

namespace {

// f(w) = sum c_i w^i and its exact Taylor coefficients around w0, by
// synthetic division (repeated Horner with remainder).
Jet poly_jet(const std::vector<double>& c, int order, double w0) {
  std::vector<double> work = c;
  Jet out(order, 0.0);
  for (int k = 0; k <= order; ++k) {
    if (work.empty()) break;
    double rem = work.back();
    for (int i = (int)work.size() - 2; i >= 0; --i)
      rem = rem * w0 + work[i];
    out.coeff(k) = rem;
    // divide by (w - w0)
    std::vector<double> q(work.size() > 1 ? work.size() - 1 : 0);
    double carry = 0.0;
    for (int i = (int)work.size() - 1; i >= 1; --i) {
      carry = work[i] + carry * w0;
      q[i - 1] = carry;
    }
    work = q;
  }
  return out;
}

Jet eval_poly(const std::vector<double>& c, const Jet& w) {
  Jet acc(w.order(), 0.0);
  for (int i = (int)c.size() - 1; i >= 0; --i) acc = cplx(c[i], 0.0) + acc * w;
  return acc;
}

double coeff_dist(const Jet& a, const Jet& b) {
  double d = 0.0;
  for (int i = 0; i <= a.order(); ++i)
    d = std::max(d, std::abs(a.coeff(i) - b.coeff(i)));
  return d;
}

}  // namespace

TEST_CASE("variable jet and derivative scaling") {
  Jet x = Jet::variable(4, 0.3);
  CHECK(x.coeff(0) == cplx(0.3, 0.0));
  CHECK(x.coeff(1) == cplx(1.0, 0.0));
  CHECK(x.coeff(2) == cplx(0.0, 0.0));

  // f = x^3: f'''(w0) = 6, coeff(3) = 1 -> derivative(3) = 3! * 1
  Jet f = x * x * x;
  CHECK(std::abs(f.derivative(3) - cplx(6.0, 0.0)) < 1e-15);
  CHECK(std::abs(f.derivative(2) - cplx(6.0 * 0.3, 0.0)) < 1e-15);
  CHECK_THROWS_AS(Jet(-1, cplx(0.0)), std::domain_error);
}

TEST_CASE("polynomial evaluation in jet arithmetic matches synthetic division") {
  std::mt19937 rng(911);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    int deg = 1 + (int)(rng() % 8);
    std::vector<double> c(deg + 1);
    for (double& v : c) v = coef(rng);
    double w0 = coef(rng);
    int order = 5;
    Jet via_arith = eval_poly(c, Jet::variable(order, w0));
    Jet exact = poly_jet(c, order, w0);
    CHECK(coeff_dist(via_arith, exact) < 1e-13);
  }
}

TEST_CASE("product rule across arbitrary jets") {
  std::mt19937 rng(912);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<double> p(5), q(4);
    for (double& v : p) v = coef(rng);
    for (double& v : q) v = coef(rng);
    std::vector<double> pq(p.size() + q.size() - 1, 0.0);
    for (size_t i = 0; i < p.size(); ++i)
      for (size_t j = 0; j < q.size(); ++j) pq[i + j] += p[i] * q[j];
    double w0 = coef(rng);
    Jet a = poly_jet(p, 6, w0), b = poly_jet(q, 6, w0);
    CHECK(coeff_dist(a * b, poly_jet(pq, 6, w0)) < 1e-13);
  }
}

TEST_CASE("reciprocal, sqrt, exp satisfy their defining identities") {
  std::mt19937 rng(913);
  std::uniform_real_distribution<double> coef(-0.4, 0.4);
  for (int trial = 0; trial < 30; ++trial) {
    Jet u(6, cplx(1.3 + coef(rng), coef(rng)));
    for (int i = 1; i <= 6; ++i) u.coeff(i) = cplx(coef(rng), coef(rng));

    Jet one = u * jet_recip(u);
    CHECK(std::abs(one.coeff(0) - cplx(1.0, 0.0)) < 1e-14);
    for (int i = 1; i <= 6; ++i) CHECK(std::abs(one.coeff(i)) < 1e-13);

    Jet s = jet_sqrt(u);
    CHECK(coeff_dist(s * s, u) < 1e-13);

    // exp(u) * exp(-u) = 1
    Jet e = jet_exp(u) * jet_exp((-1.0) * u);
    CHECK(std::abs(e.coeff(0) - cplx(1.0, 0.0)) < 1e-13);
    for (int i = 1; i <= 6; ++i) CHECK(std::abs(e.coeff(i)) < 1e-13);
  }
  CHECK_THROWS_AS(jet_recip(Jet(3, cplx(0.0))), std::domain_error);
  CHECK_THROWS_AS(jet_sqrt(Jet(3, cplx(0.0))), std::domain_error);
}

TEST_CASE("sin/cos pair: pythagorean identity and known derivatives") {
  Jet x = Jet::variable(6, 0.7);
  Jet s(6, 0.0), c(6, 0.0);
  jet_sin_cos(x, s, c);
  Jet unit = s * s + c * c;
  CHECK(std::abs(unit.coeff(0) - cplx(1.0, 0.0)) < 1e-15);
  for (int i = 1; i <= 6; ++i) CHECK(std::abs(unit.coeff(i)) < 1e-15);

  // d^k/dw^k sin(w) cycles through cos, -sin, -cos, sin
  CHECK(std::abs(s.derivative(1) - cplx(std::cos(0.7), 0.0)) < 1e-15);
  CHECK(std::abs(s.derivative(2) + cplx(std::sin(0.7), 0.0)) < 1e-15);
  CHECK(std::abs(s.derivative(3) + cplx(std::cos(0.7), 0.0)) < 1e-15);
  CHECK(std::abs(c.derivative(2) + cplx(std::cos(0.7), 0.0)) < 1e-14);

  // composite argument: cos(x^2) at w0, second derivative by hand
  Jet x2 = x * x;
  Jet cc = jet_cos(x2);
  double w0 = 0.7;
  double want = -2.0 * std::sin(w0 * w0) -
                4.0 * w0 * w0 * std::cos(w0 * w0);
  CHECK(std::abs(cc.derivative(2) - cplx(want, 0.0)) < 1e-14);
}

TEST_CASE("acos jet inverts cos and has the textbook derivative") {
  for (double w0 : {-0.85, -0.2, 0.0, 0.45, 0.9}) {
    Jet t = jet_acos(Jet::variable(6, w0));
    CHECK(std::abs(t.coeff(0) - cplx(std::acos(w0), 0.0)) < 1e-15);
    // t'(w0) = -1/sqrt(1-w0^2)
    double want = -1.0 / std::sqrt(1.0 - w0 * w0);
    CHECK(std::abs(t.derivative(1) - cplx(want, 0.0)) < 1e-13);
    // cos(acos(w)) must reproduce the identity jet
    Jet back = jet_cos(t);
    CHECK(coeff_dist(back, Jet::variable(6, w0)) < 1e-12);
  }
  CHECK_THROWS_AS(jet_acos(Jet::variable(3, 1.0)), std::domain_error);
  CHECK_THROWS_AS(jet_acos(Jet::variable(3, -1.2)), std::domain_error);
}
