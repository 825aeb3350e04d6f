// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The tfq Authors

#include "tfq/synth.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "tfq/distributions.hpp"
#include "tfq/errors.hpp"
#include "tfq/io.hpp"

namespace tfq {
namespace {

constexpr double pi = std::numbers::pi;

double origin(std::size_t n, double dx) { return -static_cast<double>(n / 2) * dx; }

cplx cis2pi(double t) { return {std::cos(2.0 * pi * t), std::sin(2.0 * pi * t)}; }

// Gaussian envelope that decays below 1e-12 at the edge of the central half.
double envelope(double x, std::size_t n, double dx) {
  const double quarter = static_cast<double>(n) * dx / 4.0;
  const double sigma = quarter / 3.0;
  return std::exp(-pi * x * x / (sigma * sigma));
}

}  // namespace

SignalRecipe::Kind parse_recipe_kind(const std::string& s) {
  using K = SignalRecipe::Kind;
  if (s == "gaussian") return K::gaussian;
  if (s == "gabor_atom") return K::gabor_atom;
  if (s == "two_atoms") return K::two_atoms;
  if (s == "two_tone") return K::two_tone;
  if (s == "chirp") return K::chirp;
  if (s == "from_file") return K::from_file;
  throw DomainError("unknown signal kind '" + s + "'");
}

SampledSignal gabor_atom(double t0, double nu0, double lambda, std::size_t n, double dx) {
  if (!(lambda > 0.0)) throw GenerationError("atom dilation must be positive");
  const double x0 = origin(n, dx);
  const double c = std::pow(2.0 * lambda, 0.25);
  std::vector<cplx> v(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double x = x0 + static_cast<double>(k) * dx;
    v[k] = c * std::exp(-pi * lambda * (x - t0) * (x - t0)) * cis2pi(nu0 * x);
  }
  return SampledSignal(std::move(v), x0, dx);
}

SampledSignal synth(const SignalRecipe& r) {
  using K = SignalRecipe::Kind;
  if (r.kind == K::from_file) {
    SampledSignal f = read_signal(r.path);
    try {
      check_central_support(f);
    } catch (const AliasingError& e) {
      throw GenerationError(e.what());
    }
    return f;
  }
  if (r.n < 8 || !is_power_of_two(r.n)) throw GenerationError("n must be a power of two >= 8");
  if (!(r.dx > 0.0)) throw GenerationError("dx must be positive");
  const std::size_t n = r.n;
  const double dx = r.dx;
  const double x0 = origin(n, dx);
  std::vector<cplx> v(n);
  switch (r.kind) {
    case K::gaussian: {
      if (!(r.lambda > 0.0)) throw GenerationError("lambda must be positive");
      for (std::size_t k = 0; k < n; ++k) {
        const double x = x0 + static_cast<double>(k) * dx;
        v[k] = std::exp(-pi * r.lambda * x * x);
      }
      break;
    }
    case K::gabor_atom:
      v = gabor_atom(r.t0, r.nu0, r.lambda, n, dx).samples();
      break;
    case K::two_atoms: {
      const auto a = gabor_atom(-r.delta_t / 2.0, -r.delta_nu / 2.0, 1.0, n, dx);
      const auto b = gabor_atom(r.delta_t / 2.0, r.delta_nu / 2.0, 1.0, n, dx);
      for (std::size_t k = 0; k < n; ++k) v[k] = a[k] + b[k];
      break;
    }
    case K::two_tone: {
      std::mt19937_64 rng(r.seed);
      std::uniform_real_distribution<double> phase(0.0, 1.0);
      const double p1 = phase(rng);
      const double p2 = phase(rng);
      for (std::size_t k = 0; k < n; ++k) {
        const double x = x0 + static_cast<double>(k) * dx;
        v[k] = envelope(x, n, dx) * (cis2pi(r.nu1 * x + p1) + cis2pi(r.nu2 * x + p2));
      }
      break;
    }
    case K::chirp: {
      for (std::size_t k = 0; k < n; ++k) {
        const double x = x0 + static_cast<double>(k) * dx;
        v[k] = envelope(x, n, dx) * cis2pi(0.5 * r.rate * x * x);
      }
      break;
    }
    case K::from_file:
      break;
  }
  SampledSignal f(std::move(v), x0, dx);
  try {
    check_central_support(f);
  } catch (const AliasingError& e) {
    throw GenerationError(std::string("generated signal violates the support rule: ") + e.what());
  }
  return f;
}

}  // namespace tfq
