// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The tfq Authors

#include "tfq/special_functions.hpp"

#include <cmath>
#include <complex>
#include <string>
#include <utility>

#include "tfq/errors.hpp"
#include "tfq/quadrature.hpp"
#include "tfq/summation.hpp"

namespace tfq {
namespace {

constexpr double pi = std::numbers::pi;

// Returns {Ci(t), Si(t)}.
std::pair<double, double> cisi_series(double t) {
  const double t2 = t * t;
  CompensatedSum ci;
  CompensatedSum si;
  double a = 1.0;  // (-t^2)^k/(2k)!
  double b = t;    // (-1)^k t^(2k+1)/(2k+1)!
  si.add(b);
  for (int k = 1; k <= 30; ++k) {
    a *= -t2 / ((2.0 * k - 1.0) * (2.0 * k));
    b *= -t2 / ((2.0 * k) * (2.0 * k + 1.0));
    const double tc = a / (2.0 * k);
    const double ts = b / (2.0 * k + 1.0);
    ci.add(tc);
    si.add(ts);
    if (std::abs(tc) < 1e-18 && std::abs(ts) < 1e-18) break;
  }
  return {euler_gamma + std::log(t) + ci.value(), si.value()};
}

// int_t^inf e^{is}/s ds = i e^{it} int_0^inf e^{-u}/(t + iu) du, integrated on
// panels that start at width ~t near the pole and grow geometrically.
std::pair<double, double> cisi_quadrature(double t) {
  const double u_max = 45.0;
  auto integrand = [t](double u) { return std::exp(-u) / std::complex<double>(t, u); };
  CompensatedComplexSum acc;
  double a = 0.0;
  double w = std::min(t, 2.0);
  while (a < u_max) {
    const double b = a + w;
    acc.add(gl_integrate(integrand, a, b, 24));
    a = b;
    w = std::min(std::max(w, a), 2.0);
  }
  const std::complex<double> tail =
      std::complex<double>(0.0, 1.0) * std::exp(std::complex<double>(0.0, t)) * acc.value();
  return {-tail.real(), pi / 2.0 - tail.imag()};
}

std::pair<double, double> cisi_asymptotic(double t) {
  const double inv2 = 1.0 / (t * t);
  double f = 0.0;
  double g = 0.0;
  double tf = 1.0;  // (2k)!/t^(2k)
  double tg = 1.0;  // (2k+1)!/t^(2k)
  double sgn = 1.0;
  for (int k = 0; k < 8; ++k) {
    if (k > 0) {
      tf *= (2.0 * k - 1.0) * (2.0 * k) * inv2;
      tg *= (2.0 * k) * (2.0 * k + 1.0) * inv2;
    }
    f += sgn * tf;
    g += sgn * tg;
    sgn = -sgn;
  }
  f /= t;
  g *= inv2;
  const double s = std::sin(t);
  const double c = std::cos(t);
  return {f * s - g * c, pi / 2.0 - f * c - g * s};
}

CiMethod route(double t) {
  if (t <= ci_series_max) return CiMethod::series;
  if (t >= ci_asymptotic_min) return CiMethod::asymptotic;
  return CiMethod::quadrature;
}

std::pair<double, double> cisi(double t, CiMethod m) {
  switch (m) {
    case CiMethod::series:
      if (t > ci_series_max) throw DomainError("series branch needs t <= 4");
      return cisi_series(t);
    case CiMethod::asymptotic:
      if (t < ci_asymptotic_min) throw DomainError("asymptotic branch needs t >= 32");
      return cisi_asymptotic(t);
    case CiMethod::quadrature:
      return cisi_quadrature(t);
  }
  throw DomainError("unknown method");
}

}  // namespace

double sin_pi(double t) {
  double r = t - 2.0 * std::nearbyint(t / 2.0);  // [-1, 1]
  if (r > 0.5)
    r = 1.0 - r;
  else if (r < -0.5)
    r = -1.0 - r;
  if (r == 0.0) return 0.0;
  if (r == 0.5) return 1.0;
  if (r == -0.5) return -1.0;
  return std::sin(pi * r);
}

double cos_pi(double t) {
  double r = std::abs(t - 2.0 * std::nearbyint(t / 2.0));  // [0, 1]
  double sign = 1.0;
  if (r > 0.5) {
    r = 1.0 - r;
    sign = -1.0;
  }
  if (r == 0.5) return 0.0;
  return sign * std::cos(pi * r);
}

double sinc(double t) {
  if (t == 0.0) return 1.0;
  return sin_pi(t) / (pi * t);
}

CiEvaluation cosine_integral_eval(double t, CiMethod method) {
  if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("cosine_integral needs finite t > 0");
  return {t, cisi(t, method).first, method};
}

CiEvaluation cosine_integral_eval(double t) {
  if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("cosine_integral needs finite t > 0");
  return cosine_integral_eval(t, route(t));
}

double cosine_integral(double t) { return cosine_integral_eval(t).value; }

double sine_integral(double t, CiMethod method) {
  if (!std::isfinite(t)) throw DomainError("sine_integral needs finite t");
  if (t == 0.0) return 0.0;
  if (t < 0.0) return -sine_integral(-t, method);
  return cisi(t, method).second;
}

double sine_integral(double t) {
  if (t == 0.0) return 0.0;
  return sine_integral(t, route(std::abs(t)));
}

const char* to_string(CiMethod m) {
  switch (m) {
    case CiMethod::series:
      return "series";
    case CiMethod::quadrature:
      return "quadrature";
    case CiMethod::asymptotic:
      return "asymptotic";
  }
  return "unknown";
}

}  // namespace tfq
