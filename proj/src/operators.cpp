// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The tfq Authors

#include "tfq/operators.hpp"

#include <cmath>
#include <sstream>

#include "tfq/distributions.hpp"
#include "tfq/errors.hpp"
#include "tfq/fft.hpp"
#include "tfq/parallel.hpp"
#include "tfq/summation.hpp"

namespace tfq {
namespace {

bool close_abs(double a, double b, double scale) { return std::abs(a - b) <= 1e-12 * scale; }

void check_signal_grid(const Symbol& a, const SampledSignal& f) {
  const auto& g = a.grid();
  if (g.nx != f.n() || !close_abs(g.dx, f.dx(), g.dx) ||
      !close_abs(g.x0, f.x0(), std::max(1.0, std::abs(g.x0))))
    throw GridError("symbol grid does not match the signal grid");
}

PhaseSpaceGrid ambiguity_grid(const PhaseSpaceGrid& g) {
  const std::size_t n = g.nx;
  PhaseSpaceGrid ag;
  ag.nx = ag.nw = n;
  ag.dx = 1.0 / (static_cast<double>(n) * g.dw);
  ag.dw = 1.0 / (static_cast<double>(n) * g.dx);
  ag.x0 = -static_cast<double>(n) * ag.dx / 2.0;
  ag.w0 = -static_cast<double>(n) * ag.dw / 2.0;
  return ag;
}

cplx pair_with(const TFMatrix& a, const TFMatrix& d) {
  CompensatedComplexSum s;
  const auto& av = a.values();
  const auto& dv = d.values();
  for (std::size_t i = 0; i < av.size(); ++i) s.add(av[i] * std::conj(dv[i]));
  return s.value() * (a.grid().dx * a.grid().dw);
}

// W(e_k, f): row a carries only the lag m = k - a.
TFMatrix wigner_unit_left(std::size_t k, const SampledSignal& f, const PhaseSpaceGrid& grid,
                          const std::vector<cplx>& roots) {
  const std::size_t n = f.n();
  TFMatrix w(grid, DomainTag::phase_space);
  const double scale = 2.0 * f.dx();
  for (std::size_t a = 0; a < n; ++a) {
    const long m = static_cast<long>(k) - static_cast<long>(a);
    const long reach = static_cast<long>(std::min(a, n - 1 - a));
    if (std::abs(m) > reach) continue;
    const cplx v = scale * std::conj(f[a - m]);
    if (v == cplx(0.0, 0.0)) continue;
    const long ln = static_cast<long>(n);
    long step = (2 * m) % ln;
    if (step < 0) step += ln;
    for (std::size_t j = n / 4; j < 3 * n / 4; ++j)
      w(a, j) = v * roots[(static_cast<std::size_t>(step) * j) % n];
  }
  return w;
}

std::vector<cplx> roots_of_unity(std::size_t n) {
  std::vector<cplx> r(n);
  for (std::size_t i = 0; i < n; ++i)
    r[i] = fft::expi2pi(-static_cast<double>(i) / static_cast<double>(n));
  return r;
}

SampledSignal unit_sample(std::size_t k, const SampledSignal& like) {
  std::vector<cplx> v(like.n());
  v[k] = 1.0;
  return SampledSignal(std::move(v), like.x0(), like.dx());
}

// Column of Op(a) applied to f, sharing the multiplier and root tables.
std::vector<cplx> apply_column(const Symbol& a, const TFMatrix& mult, const SampledSignal& f,
                               const std::vector<cplx>& roots) {
  const std::size_t n = f.n();
  std::vector<cplx> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    const TFMatrix w = wigner_unit_left(k, f, a.grid(), roots);
    const TFMatrix d = cohen_filter(w, mult);
    out[k] = pair_with(a.values(), d) / f.dx();
  }
  return out;
}

}  // namespace

Symbol::Symbol(TFMatrix values) : values_(std::move(values)) {
  if (values_.domain_tag() != DomainTag::phase_space)
    throw GridError("symbol must live in the phase-space domain");
  if (!values_.grid().dft_compatible()) throw GridError("symbol grid must be DFT compatible");
  const auto& g = values_.grid();
  if (std::abs(g.w0 + static_cast<double>(g.nw) * g.dw / 2.0) > 1e-9 * g.dw * g.nw)
    throw GridError("symbol frequency axis must be centered");
}

QuantizationRule QuantizationRule::tau(double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw DomainError("tau must lie in [0, 1]");
  return QuantizationRule(Kind::tau, t);
}

CohenKernel QuantizationRule::kernel() const {
  switch (kind_) {
    case Kind::weyl:
      return CohenKernel::tau(0.5);
    case Kind::tau:
      return CohenKernel::tau(tau_);
    case Kind::born_jordan:
      return CohenKernel::born_jordan();
  }
  return CohenKernel::tau(0.5);
}

std::string QuantizationRule::name() const {
  switch (kind_) {
    case Kind::weyl:
      return "weyl";
    case Kind::born_jordan:
      return "bj";
    case Kind::tau: {
      std::ostringstream os;
      os << "tau(" << tau_ << ")";
      return os.str();
    }
  }
  return "weyl";
}

cplx weak_apply(const Symbol& a, const QuantizationRule& rule, const SampledSignal& f,
                const SampledSignal& g) {
  check_signal_grid(a, f);
  check_signal_grid(a, g);
  const TFMatrix d = cohen(g, f, rule.kernel());
  return pair_with(a.values(), d);
}

SampledSignal apply(const Symbol& a, const QuantizationRule& rule, const SampledSignal& f) {
  check_signal_grid(a, f);
  check_central_support(f);
  const TFMatrix mult = sample_multiplier(rule.kernel(), ambiguity_grid(a.grid()));
  const auto roots = roots_of_unity(f.n());
  const std::size_t n = f.n();
  std::vector<cplx> out(n);
  parallel_for(n, [&](std::size_t k) {
    const TFMatrix w = wigner_unit_left(k, f, a.grid(), roots);
    out[k] = pair_with(a.values(), cohen_filter(w, mult)) / f.dx();
  });
  return SampledSignal(std::move(out), f.x0(), f.dx());
}

std::vector<cplx> operator_matrix(const Symbol& a, const QuantizationRule& rule) {
  const auto& g = a.grid();
  const std::size_t n = g.nx;
  const TFMatrix mult = sample_multiplier(rule.kernel(), ambiguity_grid(g));
  const auto roots = roots_of_unity(n);
  const SampledSignal like(std::vector<cplx>(n), g.x0, g.dx);
  std::vector<cplx> m(n * n);
  parallel_for(n, [&](std::size_t j) {
    const auto col = apply_column(a, mult, unit_sample(j, like), roots);
    for (std::size_t k = 0; k < n; ++k) m[k * n + j] = col[k];
  });
  return m;
}

Symbol symbol_transform(const Symbol& a) {
  return Symbol(cohen_filter(a.values(), CohenKernel::born_jordan()));
}

Symbol compose_J(const Symbol& a) {
  const auto& g = a.grid();
  const std::size_t n = g.nx;
  const double half = static_cast<double>(n) / 2.0;
  if (std::abs(g.dx - g.dw) > 1e-12 * g.dx || std::abs(g.x0 + half * g.dx) > 1e-9 * g.dx)
    throw GridError("composition with J needs a centered grid with dx == dw");
  TFMatrix out(g, DomainTag::phase_space);
  const auto& v = a.values();
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) out(p, q) = v(q, (n - p) % n);
  return Symbol(std::move(out));
}

Symbol conj(const Symbol& a) {
  TFMatrix out = a.values();
  for (auto& v : out.values()) v = std::conj(v);
  return Symbol(std::move(out));
}

}  // namespace tfq
