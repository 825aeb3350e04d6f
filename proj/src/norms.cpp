// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The tfq Authors

#include "tfq/norms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "tfq/distributions.hpp"
#include "tfq/errors.hpp"
#include "tfq/gaussian_oracles.hpp"

namespace tfq {
namespace {

constexpr double pi = std::numbers::pi;

double inner_root(double s, double p) { return std::isinf(p) ? s : std::pow(s, 1.0 / p); }

}  // namespace

MixedNormSpec::MixedNormSpec(double p_, double q_, Order o) : p(p_), q(q_), order(o) {
  if (!(p >= 1.0) || !(q >= 1.0)) throw DomainError("mixed norm exponents must lie in [1, inf]");
}

double MixedNormSpec::conjugate(double p) {
  if (std::isinf(p)) return 1.0;
  if (p == 1.0) return inf;
  return p / (p - 1.0);
}

MixedNormAccumulator::MixedNormAccumulator(const MixedNormSpec& spec, std::size_t nw, double dx,
                                           double dw)
    : spec_(spec), dx_(dx), dw_(dw), col_sum_(nw), col_max_(nw, 0.0) {}

void MixedNormAccumulator::add_row(std::span<const cplx> row) {
  const double p = spec_.p;
  if (spec_.order == MixedNormSpec::Order::position_inner) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      const double a = std::abs(row[j]);
      if (std::isinf(p))
        col_max_[j] = std::max(col_max_[j], a);
      else
        col_sum_[j].add(std::pow(a, p));
    }
    return;
  }
  double inner;
  if (std::isinf(p)) {
    inner = 0.0;
    for (const auto& v : row) inner = std::max(inner, std::abs(v));
  } else {
    CompensatedSum s;
    for (const auto& v : row) s.add(std::pow(std::abs(v), p));
    inner = std::pow(s.value() * dw_, 1.0 / p);
  }
  if (std::isinf(spec_.q))
    outer_max_ = std::max(outer_max_, inner);
  else
    outer_sum_.add(std::pow(inner, spec_.q));
}

double MixedNormAccumulator::value() const {
  const double q = spec_.q;
  if (spec_.order == MixedNormSpec::Order::frequency_inner)
    return std::isinf(q) ? outer_max_ : std::pow(outer_sum_.value() * dx_, 1.0 / q);
  const double p = spec_.p;
  double outer_max = 0.0;
  CompensatedSum outer;
  for (std::size_t j = 0; j < col_sum_.size(); ++j) {
    const double inner = std::isinf(p) ? col_max_[j] : inner_root(col_sum_[j].value() * dx_, p);
    if (std::isinf(q))
      outer_max = std::max(outer_max, inner);
    else
      outer.add(std::pow(inner, q));
  }
  return std::isinf(q) ? outer_max : std::pow(outer.value() * dw_, 1.0 / q);
}

double mixed_norm(const TFMatrix& m, const MixedNormSpec& spec) {
  const auto& g = m.grid();
  MixedNormAccumulator acc(spec, g.nw, g.dx, g.dw);
  for (std::size_t a = 0; a < g.nx; ++a)
    acc.add_row(std::span<const cplx>(&m(a, 0), g.nw));
  return acc.value();
}

SampledSignal gaussian_window(const SampledSignal& f) {
  const std::size_t n = f.n();
  return sample_gaussian(1.0, n, -static_cast<double>(n / 2) * f.dx(), f.dx());
}

namespace {

double stft_norm(const SampledSignal& f, MixedNormSpec spec) {
  const std::size_t n = f.n();
  const double dw = 1.0 / (static_cast<double>(n) * f.dx());
  MixedNormAccumulator acc(spec, n, f.dx(), dw);
  stft_rows(f, StftSpec{gaussian_window(f), false},
            [&](std::size_t, std::span<const cplx> row) { acc.add_row(row); });
  return acc.value();
}

}  // namespace

double modulation_norm(const SampledSignal& f, const MixedNormSpec& spec) {
  return stft_norm(f, MixedNormSpec(spec.p, spec.q, MixedNormSpec::Order::position_inner));
}

double amalgam_norm(const SampledSignal& f, const MixedNormSpec& spec) {
  return stft_norm(f, MixedNormSpec(spec.p, spec.q, MixedNormSpec::Order::frequency_inner));
}

ScalingFamily parse_family(const std::string& s) {
  if (s == "gaussian_mod") return ScalingFamily::gaussian_mod;
  if (s == "gaussian_amalgam") return ScalingFamily::gaussian_amalgam;
  if (s == "bump_amalgam") return ScalingFamily::bump_amalgam;
  throw DomainError("unknown family '" + s + "'");
}

std::string to_string(ScalingFamily f) {
  switch (f) {
    case ScalingFamily::gaussian_mod:
      return "gaussian_mod";
    case ScalingFamily::gaussian_amalgam:
      return "gaussian_amalgam";
    case ScalingFamily::bump_amalgam:
      return "bump_amalgam";
  }
  return "gaussian_mod";
}

double scaling_target(ScalingFamily family, const MixedNormSpec& spec, double lam) {
  const bool large = lam >= 1.0;
  if (family == ScalingFamily::gaussian_mod)
    return large ? -0.5 / spec.q_conj() : -0.5 / spec.p;
  return large ? -0.5 / spec.p_conj() : -0.5 / spec.q;
}

SampledSignal scaling_signal(ScalingFamily family, double lam) {
  if (!(lam > 0.0) || !std::isfinite(lam)) throw DomainError("lambda must be positive");
  const double scale = 1.0 / std::sqrt(lam);
  const double dx = std::min(scale, 1.0) / 16.0;
  const bool bump = family == ScalingFamily::bump_amalgam;
  const double half = bump ? scale : 3.0 * scale;
  const double L = std::max(16.0, 4.0 * half);
  std::size_t n = 8;
  while (static_cast<double>(n) * dx < L) n *= 2;
  if (n > (1u << 15)) throw ResolutionError("sweep grid exceeds 32768 samples", lam);
  if (2.0 * half / dx < 16.0) throw ResolutionError("signal spans fewer than 16 samples", lam);
  const double x0 = -static_cast<double>(n / 2) * dx;
  std::vector<cplx> v(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double x = x0 + static_cast<double>(k) * dx;
    if (bump) {
      const double y = x / scale;
      v[k] = std::abs(y) < 1.0 ? std::exp(-1.0 / (1.0 - y * y)) : 0.0;
    } else {
      v[k] = std::exp(-pi * lam * x * x);
    }
  }
  SampledSignal f(std::move(v), x0, dx);
  try {
    check_central_support(f);
  } catch (const AliasingError&) {
    throw ResolutionError("signal exceeds half the sweep window", lam);
  }
  return f;
}

std::vector<double> log_spaced(double lo, double hi, std::size_t points) {
  if (!(lo > 0.0) || !(hi > lo) || points < 2) throw DomainError("invalid log-spaced range");
  std::vector<double> out(points);
  const double a = std::log(lo);
  const double b = std::log(hi);
  for (std::size_t i = 0; i < points; ++i)
    out[i] = std::exp(a + (b - a) * static_cast<double>(i) / static_cast<double>(points - 1));
  out.front() = lo;
  out.back() = hi;
  return out;
}

ScalingFit scaling_experiment(ScalingFamily family, const MixedNormSpec& spec,
                              const std::vector<double>& lambdas) {
  if (lambdas.size() < 6) throw DomainError("scaling sweeps need at least 6 points");
  const bool all_large = std::all_of(lambdas.begin(), lambdas.end(), [](double l) { return l >= 8.0; });
  const bool all_small =
      std::all_of(lambdas.begin(), lambdas.end(), [](double l) { return l > 0.0 && l <= 0.125; });
  if (!all_large && !all_small)
    throw DomainError("lambda values must all be >= 8 or all be <= 1/8");

  ScalingFit fit;
  fit.points = lambdas.size();
  fit.lambda_min = *std::min_element(lambdas.begin(), lambdas.end());
  fit.lambda_max = *std::max_element(lambdas.begin(), lambdas.end());
  fit.target = scaling_target(family, spec, lambdas.front());
  fit.table.resize(lambdas.size());
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    const SampledSignal f = scaling_signal(family, lambdas[i]);
    const double v = family == ScalingFamily::gaussian_mod ? modulation_norm(f, spec)
                                                           : amalgam_norm(f, spec);
    fit.table[i] = {lambdas[i], v, f.n(), f.dx()};
  }
  // Ordinary least squares on (log lambda, log norm).
  const double m = static_cast<double>(lambdas.size());
  double sx = 0.0, sy = 0.0;
  for (const auto& r : fit.table) {
    sx += std::log(r.lambda);
    sy += std::log(r.norm);
  }
  const double mx = sx / m;
  const double my = sy / m;
  double sxx = 0.0, sxy = 0.0;
  for (const auto& r : fit.table) {
    const double dxl = std::log(r.lambda) - mx;
    sxx += dxl * dxl;
    sxy += dxl * (std::log(r.norm) - my);
  }
  fit.exponent = sxy / sxx;
  const double icpt = my - fit.exponent * mx;
  double rss = 0.0;
  for (const auto& r : fit.table) {
    const double e = std::log(r.norm) - (icpt + fit.exponent * std::log(r.lambda));
    rss += e * e;
  }
  fit.stderr_ = std::sqrt(rss / (m - 2.0) / sxx);
  return fit;
}

double region_energy(const TFMatrix& m, const Rect& region) {
  const auto& g = m.grid();
  const double xl = g.x(g.nx - 1);
  const double wl = g.w(g.nw - 1);
  const double ex = 1e-9 * g.dx;
  const double ew = 1e-9 * g.dw;
  if (region.x_min > region.x_max || region.w_min > region.w_max ||
      region.x_min < g.x0 - ex || region.x_max > xl + ex || region.w_min < g.w0 - ew ||
      region.w_max > wl + ew)
    throw DomainError("region lies outside the grid");
  CompensatedSum s;
  for (std::size_t a = 0; a < g.nx; ++a) {
    const double x = g.x(a);
    if (x < region.x_min - ex || x > region.x_max + ex) continue;
    for (std::size_t b = 0; b < g.nw; ++b) {
      const double w = g.w(b);
      if (w < region.w_min - ew || w > region.w_max + ew) continue;
      s.add(std::norm(m(a, b)));
    }
  }
  return s.value() * g.dx * g.dw;
}

std::vector<GhostRow> ghost_energy_report(const SampledSignal& f,
                                          const std::vector<CohenKernel>& kernels,
                                          const Rect& region) {
  const TFMatrix w = wigner(f, f);
  const double ew = region_energy(w, region);
  std::vector<GhostRow> rows;
  for (const auto& k : kernels) {
    if (k.kind() == CohenKernel::Kind::delta) {
      rows.push_back({k.name(), ew, 1.0});
      continue;
    }
    const double e = region_energy(cohen_filter(w, k), region);
    rows.push_back({k.name(), e, ew > 0.0 ? e / ew : 0.0});
  }
  return rows;
}

}  // namespace tfq
