// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The tfq Authors

#include "tfq/gaussian_oracles.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "tfq/errors.hpp"

namespace tfq {
namespace {

constexpr double pi = std::numbers::pi;

void check_lambda(double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw DomainError("lambda must be positive");
}

cplx cis(double a) { return {std::cos(a), std::sin(a)}; }

}  // namespace

GaussianPair::GaussianPair(double l) : lambda(l) { check_lambda(l); }

double GaussianPair::phi(double x) const { return std::exp(-pi * x * x); }

double GaussianPair::phi_lambda(double x) const { return std::exp(-pi * lambda * x * x); }

cplx wigner_gaussian(double lambda, double x, double w) {
  check_lambda(lambda);
  const double s = lambda + 1.0;
  const double mod = 2.0 / std::sqrt(s) * std::exp(-4.0 * pi * lambda * x * x / s) *
                     std::exp(-4.0 * pi * w * w / s);
  return mod * cis(-4.0 * pi * (lambda - 1.0) * x * w / s);
}

cplx fourier_wigner_gaussian(double lambda, double z1, double z2, FourierVariant variant) {
  check_lambda(lambda);
  const double s = lambda + 1.0;
  const double c = 1.0 / std::sqrt(s);
  const double r = (lambda - 1.0) / s;
  if (variant == FourierVariant::plain)
    return c * std::exp(-pi * z1 * z1 / s - pi * lambda * z2 * z2 / s) * cis(pi * r * z1 * z2);
  return c * std::exp(-pi * lambda * z1 * z1 / s - pi * z2 * z2 / s) * cis(-pi * r * z1 * z2);
}

SampledSignal sample_gaussian(double lambda, std::size_t n, double x0, double dx) {
  check_lambda(lambda);
  std::vector<cplx> v(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double x = x0 + static_cast<double>(k) * dx;
    v[k] = std::exp(-pi * lambda * x * x);
  }
  return SampledSignal(std::move(v), x0, dx);
}

}  // namespace tfq
