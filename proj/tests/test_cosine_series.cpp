#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "rdft/cosine_series.hpp"
#include "rdft/kernel_closed.hpp"
#include "rdft/kernel_series.hpp"

using namespace rdft;
using cplx = std::complex<double>;

TEST_CASE("series evaluation on a small hand case") {
  // f(t) = 1 + 2 cos t - 0.5 cos 3t
  CosineSeries s{{cplx(1.0), cplx(2.0), cplx(0.0), cplx(-0.5)}};
  for (double t : {0.0, 0.4, 1.9, 3.14}) {
    double want = 1.0 + 2.0 * std::cos(t) - 0.5 * std::cos(3.0 * t);
    CHECK(std::abs(eval_series(s, t) - cplx(want)) < 1e-15);
  }
  CHECK(std::abs(eval_series(CosineSeries{}, 1.0)) == 0.0);
}

TEST_CASE("coefficient downsampling keeps every n-th entry") {
  CosineSeries s;
  for (int k = 0; k < 10; ++k) s.coeffs.push_back(cplx(k, -k));
  CosineSeries g = downsample_coeffs(s, 3);
  REQUIRE(g.coeffs.size() == 4);  // indices 0, 3, 6, 9
  CHECK(g.coeffs[0] == cplx(0, 0));
  CHECK(g.coeffs[1] == cplx(3, -3));
  CHECK(g.coeffs[2] == cplx(6, -6));
  CHECK(g.coeffs[3] == cplx(9, -9));
  // n = 1 is the identity
  CosineSeries id = downsample_coeffs(s, 1);
  CHECK(id.coeffs == s.coeffs);
}

TEST_CASE("downsampling = averaging over shifted arguments") {
  std::mt19937 rng(501);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * 3.141592653589793);
  for (int trial = 0; trial < 40; ++trial) {
    CosineSeries s;
    int len = 1 + (int)(rng() % 24);
    for (int k = 0; k < len; ++k)
      s.coeffs.push_back(cplx(coef(rng), coef(rng)) / std::pow(2.0, k / 4));
    int n = 2 + (int)(rng() % 5);
    for (int q = 0; q < 4; ++q) {
      double t = angle(rng);
      cplx via_coeffs = eval_series(downsample_coeffs(s, n), t);
      cplx via_shifts = downsample_by_shifts(s, n, t);
      CHECK(std::abs(via_coeffs - via_shifts) < 1e-13);
    }
  }
}

TEST_CASE("a single high harmonic downsamples to zero or survives exactly") {
  // cos(5t) downsampled by 2 has no surviving coefficient; by 5 it becomes
  // cos(t)
  CosineSeries s{{cplx(0), cplx(0), cplx(0), cplx(0), cplx(0), cplx(1.0)}};
  CosineSeries by2 = downsample_coeffs(s, 2);
  for (const cplx& c : by2.coeffs) CHECK(c == cplx(0.0));
  for (double t : {0.3, 2.2})
    CHECK(std::abs(downsample_by_shifts(s, 2, t)) < 1e-14);

  CosineSeries by5 = downsample_coeffs(s, 5);
  REQUIRE(by5.coeffs.size() == 2);
  CHECK(by5.coeffs[1] == cplx(1.0));
}

TEST_CASE("downsampling composes multiplicatively") {
  std::mt19937 rng(502);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  CosineSeries s;
  for (int k = 0; k < 37; ++k) s.coeffs.push_back(cplx(coef(rng), coef(rng)));
  for (auto [p, q] : {std::pair<int, int>{2, 3}, {3, 2}, {2, 2}, {4, 2}}) {
    CosineSeries twice = downsample_coeffs(downsample_coeffs(s, p), q);
    CosineSeries once = downsample_coeffs(s, p * q);
    REQUIRE(twice.coeffs.size() == once.coeffs.size());
    for (size_t i = 0; i < once.coeffs.size(); ++i)
      CHECK(twice.coeffs[i] == once.coeffs[i]);
  }
}

TEST_CASE("plane-wave coefficients reproduce the exponential") {
  for (double x : {0.4, 2.0, 7.5}) {
    CosineSeries s = jacobi_anger_coeffs(x, 40);
    REQUIRE(s.coeffs.size() == 41);
    for (double t : {0.0, 0.9, 2.5}) {
      cplx want = std::exp(cplx(0.0, -x * std::cos(t)));
      CHECK(std::abs(eval_series(s, t) - want) < 1e-13);
    }
  }
}

TEST_CASE("downsampled plane wave replays the dimension-2 kernel") {
  // K_{2/n}^2(z, cos t) = (1/n) sum_j e^{-i n z^{1/n} cos((t+2 pi j)/n)}
  for (int n : {2, 3, 4}) {
    for (double z : {0.7, 3.0, 10.0}) {
      double x = n * std::pow(z, 1.0 / n);
      CosineSeries pw = jacobi_anger_coeffs(x, 96);
      CosineSeries g = downsample_coeffs(pw, n);
      for (double w : {-0.8, 0.05, 0.6}) {
        KernelArgs args(z, w);
        cplx via_series = eval_series(g, args.t);
        cplx closed = kernel_dim2_closed(n, args);
        CHECK(std::abs(via_series - closed) < 1e-12);
      }
    }
  }
}
