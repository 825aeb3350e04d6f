// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The tfq Authors

// Independent reference computations and random inputs shared by the tests.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "tfq/grid.hpp"
#include "tfq/quadrature.hpp"
#include "tfq/special_functions.hpp"
#include "tfq/summation.hpp"

namespace tfq::testing {

constexpr double pi = std::numbers::pi;

inline double max_abs_diff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

inline double max_abs(const std::vector<cplx>& a) {
  double m = 0.0;
  for (const auto& v : a) m = std::max(m, std::abs(v));
  return m;
}

inline double rel_l2(const std::vector<cplx>& a, const std::vector<cplx>& ref) {
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    num += std::norm(a[i] - ref[i]);
    den += std::norm(ref[i]);
  }
  return std::sqrt(num / den);
}

inline double centered_origin(std::size_t n, double dx) { return -static_cast<double>(n / 2) * dx; }

// Sum of random unit-energy Gabor atoms, well inside the central half of the
// window and with frequencies within a quarter of the Wigner band 1/(4 dx).
inline SampledSignal random_band_limited(std::mt19937_64& rng, std::size_t n = 512,
                                         double dx = 1.0 / 16.0, int atoms = 3) {
  std::uniform_real_distribution<double> center(-2.0, 2.0);
  const double nu_max = 1.0 / (16.0 * dx);
  std::uniform_real_distribution<double> freq(-nu_max, nu_max);
  std::uniform_real_distribution<double> width(0.7, 1.5);
  std::normal_distribution<double> coef(0.0, 1.0);
  const double x0 = centered_origin(n, dx);
  std::vector<cplx> v(n);
  for (int j = 0; j < atoms; ++j) {
    const double t = center(rng), nu = freq(rng), lam = width(rng);
    const cplx c(coef(rng), coef(rng));
    for (std::size_t k = 0; k < n; ++k) {
      const double x = x0 + static_cast<double>(k) * dx;
      v[k] += c * std::pow(2.0 * lam, 0.25) * std::exp(-pi * lam * (x - t) * (x - t)) *
              std::polar(1.0, 2.0 * pi * nu * x);
    }
  }
  return SampledSignal(std::move(v), x0, dx);
}

inline TFMatrix random_smooth_matrix(std::mt19937_64& rng, const PhaseSpaceGrid& g, int blobs = 3,
                                     DomainTag tag = DomainTag::phase_space) {
  std::uniform_real_distribution<double> cx(-1.0, 1.0);
  std::uniform_real_distribution<double> wd(1.0, 2.0);
  std::normal_distribution<double> coef(0.0, 1.0);
  TFMatrix m(g, tag);
  for (int j = 0; j < blobs; ++j) {
    const double a0 = cx(rng), b0 = cx(rng), s = wd(rng);
    const cplx c(coef(rng), coef(rng));
    for (std::size_t a = 0; a < g.nx; ++a)
      for (std::size_t b = 0; b < g.nw; ++b) {
        const double x = g.x(a) - a0, w = g.w(b) - b0;
        m(a, b) += c * std::exp(-pi * (x * x + w * w) / (s * s));
      }
  }
  return m;
}

// Ci(t) from -int_t^T cos(s)/s ds with T a multiple of pi near 1e6; the
// neglected tail is O(1/T^2) because sin(T) = 0.
inline double ci_bruteforce(double t) {
  auto f = [](double s) { return std::cos(s) / s; };
  const double T = pi * std::ceil(1e6 / pi);
  CompensatedSum acc;
  double k = std::ceil(t / pi);
  if (k * pi == t) k += 1.0;
  const double first = k * pi;
  // Geometric pieces toward t resolve the 1/s growth for small t.
  double a = t;
  while (a < first) {
    const double b = std::min(first, std::max(2.0 * a, a + 1e-3));
    acc.add(gl_integrate(f, a, b, 24));
    a = b;
  }
  for (double s = first; s < T - 0.5; s += pi) acc.add(gl_integrate(f, s, s + pi, 16));
  return -acc.value();
}

// I_p(R) by two-dimensional quadrature with the inner w-integral split at the
// zeros k/x of sinc(x w).
inline double growth_bruteforce(double p, double R, int outer_panels = 400) {
  auto inner = [&](double x) {
    if (x == 0.0) return R;
    auto f = [&](double w) { return std::pow(std::abs(sinc(x * w)), p); };
    CompensatedSum s;
    double a = 0.0;
    for (int k = 1;; ++k) {
      const double b = std::min(R, k / x);
      s.add(gl_integrate(f, a, b, 16));
      a = b;
      if (b >= R) break;
    }
    return s.value();
  };
  CompensatedSum acc;
  for (int i = 0; i < outer_panels; ++i) {
    const double a = R * i / outer_panels, b = R * (i + 1) / outer_panels;
    acc.add(gl_integrate(inner, a, b, 16));
  }
  return 4.0 * acc.value();
}

}  // namespace tfq::testing
