// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The tfq Authors

#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <string>
#include <variant>

#include "tfq/grid.hpp"

namespace tfq {

// Cohen kernel, described by its multiplier in the ambiguity domain.
class CohenKernel {
 public:
  enum class Kind { delta, born_jordan, tau, custom };
  using Multiplier = std::function<cplx(double, double)>;

  static CohenKernel delta();
  static CohenKernel born_jordan();
  static CohenKernel tau(double tau);
  // The multiplier must equal 1 at the origin.
  static CohenKernel custom(Multiplier m, std::string name = "custom");

  Kind kind() const { return kind_; }
  double tau_value() const { return tau_; }
  std::string name() const;
  cplx multiplier(double z1, double z2) const;

 private:
  CohenKernel(Kind k, double tau, Multiplier m, std::string name)
      : kind_(k), tau_(tau), custom_(std::move(m)), name_(std::move(name)) {}
  Kind kind_;
  double tau_;
  Multiplier custom_;
  std::string name_;
};

// Delta: 1; BornJordan: sinc(z1 z2); Tau(t): exp(i pi (2t - 1) z1 z2).
cplx ambiguity_multiplier(const CohenKernel& k, double z1, double z2);

// Multiplier sampled on an ambiguity-domain grid.
TFMatrix sample_multiplier(const CohenKernel& k, const PhaseSpaceGrid& grid);

// -2 Ci(4 pi |z1 z2|); throws SingularPointError on the axes.
double theta_sigma_d1(double z1, double z2);

// Exact integral of theta_sigma_d1 over [u0,u1] x [v0,v1].
double theta_sigma_cell_integral(double u0, double u1, double v0, double v1);

// Cell averages of theta_sigma_d1 on the centered lag grid matching m's
// spacings, and the convolution of m with them.
TFMatrix theta_sigma_cell_averages(const PhaseSpaceGrid& grid);
TFMatrix theta_sigma_convolve(const TFMatrix& m);

// I_p(R) = integral of |sinc(x w)|^p over [-R, R]^2, p in [1, 8], R in [1, 1e4].
double theta_growth_integral(double p, double R);

// STFT of sinc(x w) against the window exp(-pi (x^2 + w^2)) at z, in the
// direction zeta. Throws AccuracyError if tol is out of reach.
cplx vg_theta(double z1, double z2, double zeta1, double zeta2, double tol = 1e-10);

// Midpoint-rule integral of |vg_theta(z, .)| over [-extent, extent]^2.
double vg_theta_l1(double z1, double z2, double extent = 6.0, std::size_t steps = 96);

}  // namespace tfq
