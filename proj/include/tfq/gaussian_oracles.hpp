// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The tfq Authors

#pragma once

#include <complex>

#include "tfq/grid.hpp"

namespace tfq {

// phi_lambda(x) = exp(-pi lambda x^2), lambda > 0.
struct GaussianPair {
  explicit GaussianPair(double lambda);
  double lambda;
  double phi(double x) const;
  double phi_lambda(double x) const;
};

// W(phi, phi_lambda)(x, w).
cplx wigner_gaussian(double lambda, double x, double w);

enum class FourierVariant { plain, symplectic };

// Plain: F W(phi, phi_lambda)(z1, z2) with exp(-2 pi i (x z1 + w z2)).
// Symplectic: F_s W(phi, phi_lambda)(z1, z2) = plain(z2, -z1).
cplx fourier_wigner_gaussian(double lambda, double z1, double z2, FourierVariant variant);

// phi_lambda sampled on x0 + k dx.
SampledSignal sample_gaussian(double lambda, std::size_t n, double x0, double dx);

}  // namespace tfq
