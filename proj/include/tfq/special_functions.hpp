// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The tfq Authors

#pragma once

#include <numbers>

namespace tfq {

inline constexpr double euler_gamma = std::numbers::egamma;

// sin(pi t) and cos(pi t) with exact argument reduction, so integers and
// half-integers give exact zeros.
double sin_pi(double t);
double cos_pi(double t);

// sin(pi t)/(pi t), sinc(0) = 1.
double sinc(double t);

enum class CiMethod { series, quadrature, asymptotic };

struct CiEvaluation {
  double t = 0.0;
  double value = 0.0;
  CiMethod method_tag = CiMethod::series;
};

// Branch limits: series on (0, 4], asymptotic on [32, inf), quadrature anywhere.
inline constexpr double ci_series_max = 4.0;
inline constexpr double ci_asymptotic_min = 32.0;

// Ci(t) = -int_t^inf cos(s)/s ds for t > 0.
double cosine_integral(double t);
CiEvaluation cosine_integral_eval(double t);
// Forces a branch; throws DomainError outside that branch's range.
CiEvaluation cosine_integral_eval(double t, CiMethod method);

// Si(t) = int_0^t sin(s)/s ds, any real t.
double sine_integral(double t);
double sine_integral(double t, CiMethod method);

const char* to_string(CiMethod m);

}  // namespace tfq
