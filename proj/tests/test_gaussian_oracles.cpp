// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The tfq Authors

#include <cmath>

#include "doctest.h"
#include "test_support.hpp"
#include "tfq/distributions.hpp"
#include "tfq/errors.hpp"
#include "tfq/gaussian_oracles.hpp"

using namespace tfq;
using namespace tfq::testing;

namespace {

// Trapezoid rule on [-20, 20]; spectrally accurate for Gaussian integrands.
template <class F>
cplx trapezoid(F f) {
  const double h = 1.0 / 512.0;
  cplx s = 0.0;
  for (int k = -20 * 512; k <= 20 * 512; ++k) s += f(k * h);
  return s * h;
}

cplx wigner_brute(double lam, double x, double w) {
  const GaussianPair gp(lam);
  return trapezoid([&](double t) {
    return gp.phi(x + t / 2.0) * gp.phi_lambda(x - t / 2.0) * std::polar(1.0, -2.0 * pi * t * w);
  });
}

// F W(f, g)(z1, z2) = int f(t - z2/2) conj g(t + z2/2) exp(-2 pi i z1 t) dt.
cplx fourier_brute(double lam, double z1, double z2) {
  const GaussianPair gp(lam);
  return trapezoid([&](double t) {
    return gp.phi(t - z2 / 2.0) * gp.phi_lambda(t + z2 / 2.0) * std::polar(1.0, -2.0 * pi * z1 * t);
  });
}

}  // namespace

TEST_SUITE("gaussian_oracles") {
  TEST_CASE("Gaussian pair and domain") {
    const GaussianPair gp(3.0);
    CHECK(gp.phi(0.0) == 1.0);
    CHECK(gp.phi_lambda(1.0) == doctest::Approx(std::exp(-3.0 * pi)));
    CHECK_THROWS_AS(GaussianPair(0.0), DomainError);
    CHECK_THROWS_AS(wigner_gaussian(-1.0, 0.0, 0.0), DomainError);
    CHECK_THROWS_AS(fourier_wigner_gaussian(0.0, 0.0, 0.0, FourierVariant::plain), DomainError);
  }

  TEST_CASE("Wigner of the standard Gaussian at the origin") {
    CHECK(std::abs(wigner_gaussian(1.0, 0.0, 0.0) - cplx(std::sqrt(2.0), 0.0)) < 1e-15);
    // real and isotropic for lambda = 1
    CHECK(std::abs(wigner_gaussian(1.0, 0.3, 0.4).imag()) < 1e-15);
    CHECK(std::abs(wigner_gaussian(1.0, 0.5, 0.0) - wigner_gaussian(1.0, 0.0, 0.5)) < 1e-15);
  }

  TEST_CASE("Wigner closed form against quadrature") {
    for (double lam : {0.25, 2.0, 5.0})
      for (auto [x, w] : {std::pair{0.5, 0.5}, std::pair{-0.3, 1.1}, std::pair{0.9, -0.7}}) {
        CAPTURE(lam);
        CAPTURE(x);
        CAPTURE(w);
        CHECK(std::abs(wigner_gaussian(lam, x, w) - wigner_brute(lam, x, w)) < 1e-10);
      }
  }

  TEST_CASE("Fourier transform closed form against quadrature") {
    for (double lam : {0.5, 2.0, 3.0})
      for (auto [z1, z2] : {std::pair{0.5, 0.5}, std::pair{-0.8, 0.3}, std::pair{1.2, -1.0}}) {
        CAPTURE(lam);
        const cplx ref = fourier_brute(lam, z1, z2);
        CHECK(std::abs(fourier_wigner_gaussian(lam, z1, z2, FourierVariant::plain) - ref) < 1e-10);
        CHECK(std::abs(fourier_wigner_gaussian(lam, z2, -z1, FourierVariant::symplectic) - ref) < 1e-10);
      }
  }

  TEST_CASE("mass identity at the origin") {
    for (double lam : {0.1, 1.0, 3.0, 10.0}) {
      const cplx v = fourier_wigner_gaussian(lam, 0.0, 0.0, FourierVariant::symplectic);
      CHECK(std::abs(v - cplx(1.0 / std::sqrt(1.0 + lam), 0.0)) < 1e-15);
    }
    CHECK(std::abs(fourier_wigner_gaussian(3.0, 0.0, 0.0, FourierVariant::symplectic) - 0.5) < 1e-15);
  }

  TEST_CASE("grid sum of the sampled Wigner equals the inner product") {
    const std::size_t n = 512;
    const double dx = 1.0 / 16.0;
    for (double lam : {0.5, 2.0, 3.0}) {
      const GaussianPair gp(lam);
      const auto W = wigner(sample_gaussian(1.0, n, centered_origin(n, dx), dx),
                            sample_gaussian(lam, n, centered_origin(n, dx), dx));
      cplx s = 0.0;
      for (const auto& v : W.values()) s += v;
      s *= W.grid().dx * W.grid().dw;
      const cplx ref = trapezoid([&](double x) { return cplx(gp.phi(x) * gp.phi_lambda(x), 0.0); });
      CHECK(std::abs(s - ref) < 1e-8 * std::abs(ref));
    }
  }

  TEST_CASE("modulus under lambda to 1/lambda") {
    for (double lam : {0.2, 2.0, 7.0})
      for (auto [z1, z2] : {std::pair{0.4, -0.9}, std::pair{1.3, 0.2}}) {
        const double a = std::abs(fourier_wigner_gaussian(lam, z1, z2, FourierVariant::plain));
        const double b = std::abs(fourier_wigner_gaussian(1.0 / lam, z2, z1, FourierVariant::plain));
        CHECK(a == doctest::Approx(b / std::sqrt(lam)).epsilon(1e-13));
      }
  }

  TEST_CASE("sampled Wigner and its symplectic transform agree with the oracles") {
    const std::size_t n = 512;
    const double dx = 1.0 / 16.0;
    const double x0 = centered_origin(n, dx);
    const auto W = wigner(sample_gaussian(1.0, n, x0, dx), sample_gaussian(2.0, n, x0, dx));
    const auto F = symplectic_fourier(W);
    double err = 0.0, peak = 0.0;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const double z1 = F.grid().x(a), z2 = F.grid().w(b);
        if (z1 * z1 + z2 * z2 > 4.0) continue;
        const cplx ref = fourier_wigner_gaussian(2.0, z1, z2, FourierVariant::symplectic);
        err = std::max(err, std::abs(F(a, b) - ref));
        peak = std::max(peak, std::abs(ref));
      }
    CHECK(err / peak < 1e-6);
  }

  TEST_CASE("sample_gaussian values") {
    const auto s = sample_gaussian(2.0, 16, -1.0, 0.125);
    CHECK(s.n() == 16);
    for (std::size_t k = 0; k < 16; ++k) {
      const double x = -1.0 + 0.125 * static_cast<double>(k);
      CHECK(s[k].real() == doctest::Approx(std::exp(-2.0 * pi * x * x)).epsilon(1e-15));
      CHECK(s[k].imag() == 0.0);
    }
  }
}
