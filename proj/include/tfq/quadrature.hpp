// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The tfq Authors

#pragma once

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "tfq/errors.hpp"

namespace tfq {

struct GaussLegendreRule {
  std::vector<double> nodes;    // on [-1, 1]
  std::vector<double> weights;
};

// Rule with n nodes; tables are cached and shared read-only.
const GaussLegendreRule& gauss_legendre(std::size_t n);

// Integral of f over [a, b] with the n-point rule.
template <class F>
auto gl_integrate(const F& f, double a, double b, std::size_t n = 32) {
  const auto& r = gauss_legendre(n);
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  using T = decltype(f(c));
  T s_hi{};
  T comp{};
  // Kahan-style compensation works for real and complex accumulators alike.
  for (std::size_t i = 0; i < r.nodes.size(); ++i) {
    const T term = r.weights[i] * f(c + h * r.nodes[i]) - comp;
    const T t = s_hi + term;
    comp = (t - s_hi) - term;
    s_hi = t;
  }
  return s_hi * h;
}

template <class T>
struct QuadratureResult {
  T value{};
  double error = 0.0;
  std::size_t evaluations = 0;
};

// Globally subdividing Gauss-Legendre: each panel is compared with its two
// halves and the worst panel is bisected until the summed error estimate
// meets tol or the evaluation budget runs out.
template <class F>
auto adaptive_integrate(const F& f, const std::vector<double>& breaks, double tol,
                        std::size_t budget, std::size_t n = 32) {
  using T = decltype(f(0.0));
  struct Panel {
    double a, b;
    T value;
    double err;
  };
  std::size_t evals = 0;
  auto halves = [&](double a, double b) {
    const double m = 0.5 * (a + b);
    const T l = gl_integrate(f, a, m, n);
    const T r = gl_integrate(f, m, b, n);
    evals += 2 * n;
    return std::pair<T, T>{l, r};
  };
  std::vector<Panel> panels;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    const double a = breaks[i];
    const double b = breaks[i + 1];
    const T whole = gl_integrate(f, a, b, n);
    evals += n;
    auto [l, r] = halves(a, b);
    panels.push_back({a, b, l + r, std::abs(whole - (l + r))});
  }
  auto total_err = [&] {
    double e = 0.0;
    for (const auto& p : panels) e += p.err;
    return e;
  };
  double err = total_err();
  while (err > tol) {
    std::size_t worst = 0;
    for (std::size_t i = 1; i < panels.size(); ++i)
      if (panels[i].err > panels[worst].err) worst = i;
    if (evals + 4 * n > budget) throw AccuracyError("quadrature node budget exhausted", err);
    const Panel p = panels[worst];
    const double m = 0.5 * (p.a + p.b);
    const T lw = gl_integrate(f, p.a, m, n);
    const T rw = gl_integrate(f, m, p.b, n);
    evals += 2 * n;
    auto [ll, lr] = halves(p.a, m);
    auto [rl, rr] = halves(m, p.b);
    panels[worst] = {p.a, m, ll + lr, std::abs(lw - (ll + lr))};
    panels.push_back({m, p.b, rl + rr, std::abs(rw - (rl + rr))});
    err = total_err();
  }
  QuadratureResult<T> res;
  T acc{};
  T comp{};
  for (const auto& p : panels) {
    const T term = p.value - comp;
    const T t = acc + term;
    comp = (t - acc) - term;
    acc = t;
  }
  res.value = acc;
  res.error = err;
  res.evaluations = evals;
  return res;
}

}  // namespace tfq
