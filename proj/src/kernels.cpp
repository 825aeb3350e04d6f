// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The tfq Authors

#include "tfq/kernels.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "tfq/errors.hpp"
#include "tfq/parallel.hpp"
#include "tfq/quadrature.hpp"
#include "tfq/special_functions.hpp"
#include "tfq/summation.hpp"

namespace tfq {
namespace {

constexpr double pi = std::numbers::pi;

// Primitive of theta_sigma_d1 in both variables, odd in each.
double theta_primitive_radial(double P) {
  if (P == 0.0) return 0.0;
  const double t = 4.0 * pi * P;
  return -2.0 * P * cosine_integral(t) + sin_pi(4.0 * P) / (2.0 * pi) +
         sine_integral(t) / (2.0 * pi);
}

double theta_primitive(double u, double v) {
  if (u == 0.0 || v == 0.0) return 0.0;
  const double s = (u > 0.0) == (v > 0.0) ? 1.0 : -1.0;
  return s * theta_primitive_radial(std::abs(u * v));
}

}  // namespace

CohenKernel CohenKernel::delta() { return CohenKernel(Kind::delta, 0.5, {}, "delta"); }

CohenKernel CohenKernel::born_jordan() { return CohenKernel(Kind::born_jordan, 0.0, {}, "bj"); }

CohenKernel CohenKernel::tau(double tau) {
  if (!(tau >= 0.0 && tau <= 1.0)) throw DomainError("tau must lie in [0, 1]");
  return CohenKernel(Kind::tau, tau, {}, "tau");
}

CohenKernel CohenKernel::custom(Multiplier m, std::string name) {
  if (!m) throw DomainError("custom kernel needs a multiplier");
  if (std::abs(m(0.0, 0.0) - cplx(1.0, 0.0)) > 1e-12)
    throw DomainError("custom multiplier must equal 1 at the origin");
  return CohenKernel(Kind::custom, 0.0, std::move(m), std::move(name));
}

std::string CohenKernel::name() const {
  if (kind_ == Kind::tau) {
    std::ostringstream os;
    os << "tau(" << tau_ << ")";
    return os.str();
  }
  return name_;
}

cplx CohenKernel::multiplier(double z1, double z2) const {
  switch (kind_) {
    case Kind::delta:
      return {1.0, 0.0};
    case Kind::born_jordan:
      return {sinc(z1 * z2), 0.0};
    case Kind::tau: {
      const double s = (2.0 * tau_ - 1.0) * z1 * z2;
      return {cos_pi(s), sin_pi(s)};
    }
    case Kind::custom:
      return custom_(z1, z2);
  }
  return {1.0, 0.0};
}

cplx ambiguity_multiplier(const CohenKernel& k, double z1, double z2) {
  return k.multiplier(z1, z2);
}

TFMatrix sample_multiplier(const CohenKernel& k, const PhaseSpaceGrid& grid) {
  TFMatrix m(grid, DomainTag::ambiguity);
  for (std::size_t a = 0; a < grid.nx; ++a)
    for (std::size_t b = 0; b < grid.nw; ++b) m(a, b) = k.multiplier(grid.x(a), grid.w(b));
  return m;
}

double theta_sigma_d1(double z1, double z2) {
  const double p = std::abs(z1 * z2);
  if (p == 0.0) throw SingularPointError("theta_sigma is singular on the axes");
  return -2.0 * cosine_integral(4.0 * pi * p);
}

double theta_sigma_cell_integral(double u0, double u1, double v0, double v1) {
  return theta_primitive(u1, v1) - theta_primitive(u0, v1) - theta_primitive(u1, v0) +
         theta_primitive(u0, v0);
}

TFMatrix theta_sigma_cell_averages(const PhaseSpaceGrid& grid) {
  const std::size_t nx = grid.nx;
  const std::size_t nw = grid.nw;
  PhaseSpaceGrid lag = grid;
  lag.x0 = -static_cast<double>(nx / 2) * grid.dx;
  lag.w0 = -static_cast<double>(nw / 2) * grid.dw;
  // Primitive on the cell corners, shared between neighbouring cells.
  std::vector<double> corner((nx + 1) * (nw + 1));
  parallel_for(nx + 1, [&](std::size_t a) {
    const double u = lag.x0 + (static_cast<double>(a) - 0.5) * grid.dx;
    for (std::size_t b = 0; b <= nw; ++b) {
      const double v = lag.w0 + (static_cast<double>(b) - 0.5) * grid.dw;
      corner[a * (nw + 1) + b] = theta_primitive(u, v);
    }
  });
  TFMatrix out(lag, DomainTag::phase_space);
  const double inv_area = 1.0 / (grid.dx * grid.dw);
  for (std::size_t a = 0; a < nx; ++a)
    for (std::size_t b = 0; b < nw; ++b) {
      const double s = corner[(a + 1) * (nw + 1) + b + 1] - corner[a * (nw + 1) + b + 1] -
                       corner[(a + 1) * (nw + 1) + b] + corner[a * (nw + 1) + b];
      out(a, b) = s * inv_area;
    }
  return out;
}

TFMatrix theta_sigma_convolve(const TFMatrix& m) {
  if (!m.grid().dft_compatible()) throw GridError("convolution grid must be DFT compatible");
  return circular_convolve(m, theta_sigma_cell_averages(m.grid()));
}

namespace {

// int_0^1 |sin(pi s)|^p (s - 1/2)^k ds, graded toward the endpoint kinks.
double periodic_moment(double p, int k) {
  auto f = [p, k](double s) { return std::pow(std::abs(sin_pi(s)), p) * std::pow(s - 0.5, k); };
  CompensatedSum acc;
  double hi = 0.5;
  for (int j = 0; j < 40; ++j) {
    const double lo = hi / 2.0;
    acc.add(gl_integrate(f, lo, hi, 24));
    acc.add(gl_integrate(f, 1.0 - hi, 1.0 - lo, 24));
    hi = lo;
  }
  return acc.value();
}

// Integral over [a, b] through u = a + (b - a) S(t), S the quintic smoothstep.
// S' vanishes to second order at both ends, which turns the |sin|^p zeros at
// the cell edges into zeros of order 3p + 2 that Gauss-Legendre resolves.
template <class F>
double smoothstep_integral(F f, double a, double b) {
  const double h = b - a;
  auto g = [&](double t) {
    const double t2 = t * t;
    const double S = t2 * t * (10.0 - 15.0 * t + 6.0 * t2);
    const double dS = 30.0 * t2 * (1.0 - t) * (1.0 - t);
    return f(a + h * S) * h * dS;
  };
  return gl_integrate(g, 0.0, 1.0, 20);
}

}  // namespace

double theta_growth_integral(double p, double R) {
  if (!(p >= 1.0 && p <= 8.0)) throw DomainError("theta_growth_integral needs p in [1, 8]");
  if (!(R >= 1.0 && R <= 1e4)) throw DomainError("theta_growth_integral needs R in [1, 1e4]");
  // The x-integral is done in closed form along the hyperbolas u = x w:
  // I_p(R) = 4 int_0^{R^2} |sinc u|^p log(R^2/u) du.
  const double R2 = R * R;
  const double logR2 = std::log(R2);
  auto s = [p](double u) { return std::pow(std::abs(sinc(u)), p); };
  auto integrand = [&](double u) { return s(u) * (logR2 - std::log(u)); };

  CompensatedSum acc;
  // [0, 1]: dyadic pieces toward the logarithmic endpoint.
  const double top = std::min(1.0, R2);
  double hi = top / 2.0;
  acc.add(smoothstep_integral(integrand, hi, top));
  for (int j = 1; j < 50; ++j) {
    const double lo = hi / 2.0;
    acc.add(gl_integrate(integrand, lo, hi, 16));
    hi = lo;
  }
  acc.add(hi * (logR2 - std::log(hi) + 1.0));  // s(u) = 1 + O(u^2) on [0, hi]

  const double M = std::floor(R2);
  const double K0 = 4096.0;
  const double near_end = std::min(M, K0);
  for (double k = 1.0; k < near_end; k += 1.0) acc.add(smoothstep_integral(integrand, k, k + 1.0));

  if (M > K0) {
    // Unit cells far out: |sin(pi u)|^p averages to c_p against the slowly
    // varying weight H(u) = (pi u)^{-p} log(R^2/u); the midpoint
    // Euler-Maclaurin and second-moment corrections enter through H'.
    const double cp = std::exp(std::lgamma((p + 1.0) / 2.0) - std::lgamma(p / 2.0 + 1.0)) /
                      std::sqrt(pi);
    const double m2 = periodic_moment(p, 2);
    auto H = [&](double u) { return std::pow(pi * u, -p) * (logR2 - std::log(u)); };
    auto dH = [&](double u) {
      return -std::pow(pi, -p) * std::pow(u, -p - 1.0) * (p * (logR2 - std::log(u)) + 1.0);
    };
    CompensatedSum hint;
    const double s0 = std::log(K0);
    const double s1 = std::log(M);
    const int panels = 16;
    for (int i = 0; i < panels; ++i) {
      const double a = s0 + (s1 - s0) * i / panels;
      const double b = s0 + (s1 - s0) * (i + 1) / panels;
      hint.add(gl_integrate([&](double t) { return H(std::exp(t)) * std::exp(t); }, a, b, 32));
    }
    const double dd = dH(M) - dH(K0);
    acc.add(cp * (hint.value() - dd / 24.0) + 0.5 * m2 * dd);
  }
  if (R2 > M && M >= 1.0) acc.add(smoothstep_integral(integrand, M, R2));
  return 4.0 * acc.value();
}

cplx vg_theta(double z1, double z2, double zeta1, double zeta2, double tol) {
  // Gaussian integrals in (x, w) leave a smooth integral over t in [-1/2, 1/2].
  const double zz = z1 * zeta1 + z2 * zeta2;
  const double cross = z1 * z2 - zeta1 * zeta2;
  auto f = [&](double t) {
    const double q = 1.0 + t * t;
    const double a = t * z1 - zeta2;
    const double b = t * z2 - zeta1;
    const double re = -pi * (a * a + b * b) / q;
    const double im = -2.0 * pi * (zz - t * cross) / q;
    return std::exp(re) / std::sqrt(q) * cplx(std::cos(im), std::sin(im));
  };
  return adaptive_integrate(f, {-0.5, 0.0, 0.5}, tol, 400000, 32).value;
}

double vg_theta_l1(double z1, double z2, double extent, std::size_t steps) {
  const double h = 2.0 * extent / static_cast<double>(steps);
  std::vector<double> rows(steps);
  parallel_for(steps, [&](std::size_t i) {
    const double zeta1 = -extent + (static_cast<double>(i) + 0.5) * h;
    CompensatedSum s;
    for (std::size_t j = 0; j < steps; ++j) {
      const double zeta2 = -extent + (static_cast<double>(j) + 0.5) * h;
      s.add(std::abs(vg_theta(z1, z2, zeta1, zeta2, 1e-9)));
    }
    rows[i] = s.value();
  });
  CompensatedSum total;
  for (double r : rows) total.add(r);
  return total.value() * h * h;
}

}  // namespace tfq
