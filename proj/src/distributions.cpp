// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The tfq Authors

#include "tfq/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "tfq/errors.hpp"
#include "tfq/fft.hpp"
#include "tfq/parallel.hpp"

namespace tfq {
namespace {

bool close_rel(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max(std::abs(a), std::abs(b));
}

PhaseSpaceGrid signal_grid(const SampledSignal& f) {
  return make_phase_space_grid(f.n(), f.x0(), f.dx());
}

}  // namespace

namespace detail {

void check_same_grid(const SampledSignal& f, const SampledSignal& g) {
  if (f.n() != g.n() || !close_rel(f.dx(), g.dx(), 1e-12) ||
      std::abs(f.x0() - g.x0()) > 1e-12 * std::max(1.0, std::abs(f.x0())))
    throw GridError("signals must share one grid");
}

TFMatrix wigner_unchecked(const SampledSignal& f, const SampledSignal& g) {
  check_same_grid(f, g);
  const std::size_t n = f.n();
  const PhaseSpaceGrid grid = signal_grid(f);
  TFMatrix out(grid, DomainTag::phase_space);
  const double scale = 2.0 * f.dx();
  const auto& fs = f.samples();
  const auto& gs = g.samples();
  const std::size_t lo_band = n / 4;
  const std::size_t hi_band = 3 * n / 4;
  parallel_for(n, [&](std::size_t a) {
    std::vector<cplx> s(n);
    const long reach = static_cast<long>(std::min(a, n - 1 - a));
    const long ln = static_cast<long>(n);
    for (long m = -reach; m <= reach; ++m) {
      long p = (2 * m) % ln;
      if (p < 0) p += ln;
      s[static_cast<std::size_t>(p)] += fs[a + m] * std::conj(gs[a - m]);
    }
    fft::transform(s, -1);
    for (std::size_t j = lo_band; j < hi_band; ++j) out(a, j) = scale * s[j];
  });
  return out;
}

}  // namespace detail

void check_central_support(const SampledSignal& f) {
  const std::size_t n = f.n();
  double peak = 0.0;
  for (const auto& v : f.samples()) peak = std::max(peak, std::abs(v));
  if (peak == 0.0) return;
  for (std::size_t k = 0; k < n; ++k) {
    if (k >= n / 4 && k < 3 * n / 4) continue;
    if (std::abs(f[k]) > 1e-9 * peak)
      throw AliasingError("signal support reaches the outer half of the window (sample " +
                          std::to_string(k) + ")");
  }
}

TFMatrix wigner(const SampledSignal& f, const SampledSignal& g) {
  detail::check_same_grid(f, g);
  check_central_support(f);
  check_central_support(g);
  return detail::wigner_unchecked(f, g);
}

TFMatrix cohen_filter(const TFMatrix& m, const TFMatrix& multiplier) {
  const auto& g = m.grid();
  bool zero = true;
  for (const auto& v : m.values())
    if (v != cplx(0.0, 0.0)) {
      zero = false;
      break;
    }
  if (zero) return m;
  TFMatrix amb = symplectic_fourier(m);
  const auto& ag = amb.grid();
  const auto& mg = multiplier.grid();
  if (mg.nx != ag.nx || mg.nw != ag.nw || !close_rel(mg.dx, ag.dx, 1e-12) ||
      !close_rel(mg.dw, ag.dw, 1e-12) || std::abs(mg.x0 - ag.x0) > 1e-9 * ag.dx ||
      std::abs(mg.w0 - ag.w0) > 1e-9 * ag.dw)
    throw GridError("multiplier grid does not match the ambiguity grid");
  auto& v = amb.values();
  const auto& mv = multiplier.values();
  for (std::size_t i = 0; i < v.size(); ++i) v[i] *= mv[i];
  TFMatrix back = symplectic_fourier(amb, g.x0, g.w0);
  return TFMatrix(g, m.domain_tag(), std::move(back.values()));
}

TFMatrix cohen_filter(const TFMatrix& m, const CohenKernel& k) {
  if (!m.grid().dft_compatible()) throw GridError("cohen filtering needs a DFT-compatible grid");
  const auto& g = m.grid();
  const std::size_t n = g.nx;
  PhaseSpaceGrid ag;
  ag.nx = ag.nw = n;
  ag.dx = 1.0 / (static_cast<double>(n) * g.dw);
  ag.dw = 1.0 / (static_cast<double>(n) * g.dx);
  ag.x0 = -static_cast<double>(n) * ag.dx / 2.0;
  ag.w0 = -static_cast<double>(n) * ag.dw / 2.0;
  return cohen_filter(m, sample_multiplier(k, ag));
}

TFMatrix cohen(const SampledSignal& f, const SampledSignal& g, const CohenKernel& k) {
  return cohen_filter(wigner(f, g), k);
}

TFMatrix born_jordan(const SampledSignal& f, const SampledSignal& g) {
  return cohen(f, g, CohenKernel::born_jordan());
}

void stft_rows(const SampledSignal& f, const StftSpec& spec,
               const std::function<void(std::size_t, std::span<const cplx>)>& visit) {
  const SampledSignal& w = spec.window;
  const std::size_t n = f.n();
  if (!close_rel(w.dx(), f.dx(), 1e-12)) throw GridError("window and signal spacing differ");
  if (w.n() > n) throw GridError("window longer than the signal grid");
  const double off = w.x0() / w.dx();
  if (std::abs(off - std::nearbyint(off)) > 1e-9)
    throw GridError("window origin is not on the sample lattice");
  if (w.energy() == 0.0) throw WindowError("window is identically zero");
  const long o = static_cast<long>(std::nearbyint(off));
  const long ln = static_cast<long>(n);
  const double dx = f.dx();
  const double w0 = -1.0 / (2.0 * dx);
  const double dw = 1.0 / (static_cast<double>(n) * dx);
  const auto tw = fft::make_shift_twiddles(n, f.x0(), dx, w0, -1);
  std::vector<cplx> gconj(n);
  for (std::size_t i = 0; i < w.n(); ++i) gconj[i] = std::conj(w[i]);

  const std::size_t block = 64;
  std::vector<cplx> buf(block * n);
  for (std::size_t start = 0; start < n; start += block) {
    const std::size_t rows = std::min(block, n - start);
    parallel_for(rows, [&](std::size_t r) {
      const std::size_t a = start + r;
      cplx* row = buf.data() + r * n;
      for (std::size_t k = 0; k < n; ++k) {
        long i = (static_cast<long>(k) - static_cast<long>(a) - o) % ln;
        if (i < 0) i += ln;
        row[k] = static_cast<std::size_t>(i) < w.n() ? f[k] * gconj[static_cast<std::size_t>(i)]
                                                     : cplx(0.0, 0.0);
      }
      fft::shifted_dft_rows(std::span<cplx>(row, n), 1, tw);
      if (spec.centered) {
        const double xa = f.x(a);
        for (std::size_t j = 0; j < n; ++j)
          row[j] *= fft::expi2pi(xa * (w0 + static_cast<double>(j) * dw));
      }
    });
    for (std::size_t r = 0; r < rows; ++r)
      visit(start + r, std::span<const cplx>(buf.data() + r * n, n));
  }
}

TFMatrix stft(const SampledSignal& f, const StftSpec& spec) {
  TFMatrix out(signal_grid(f), DomainTag::phase_space);
  const std::size_t n = f.n();
  stft_rows(f, spec, [&](std::size_t a, std::span<const cplx> row) {
    std::copy(row.begin(), row.end(), out.values().begin() + static_cast<long>(a * n));
  });
  return out;
}

namespace {

// Rows m = 0..n-1 hold f(x_a + c (m - n/2) dx) for all a, from the periodic
// band-limited interpolant.
std::vector<cplx> delayed_copies(const SampledSignal& f, double c) {
  const std::size_t n = f.n();
  std::vector<cplx> spec(f.samples());
  fft::transform(spec, -1);
  const double L = static_cast<double>(n) * f.dx();
  std::vector<cplx> out(n * n);
  parallel_for(n, [&](std::size_t m) {
    const double shift = c * (static_cast<double>(m) - static_cast<double>(n / 2)) * f.dx();
    cplx* row = out.data() + m * n;
    for (std::size_t k = 0; k < n; ++k) {
      if (k == n / 2) {
        // Nyquist bin split symmetrically.
        row[k] = spec[k] * std::cos(std::numbers::pi * static_cast<double>(n) * shift / L);
        continue;
      }
      const double kk = k < n / 2 ? static_cast<double>(k) : static_cast<double>(k) - n;
      row[k] = spec[k] * fft::expi2pi(kk * shift / L);
    }
    fft::transform(std::span<cplx>(row, n), +1);
    for (std::size_t k = 0; k < n; ++k) row[k] /= static_cast<double>(n);
  });
  return out;
}

}  // namespace

TFMatrix tau_wigner_direct(const SampledSignal& f, const SampledSignal& g, double tau) {
  if (!(tau >= 0.0 && tau <= 1.0)) throw DomainError("tau must lie in [0, 1]");
  detail::check_same_grid(f, g);
  const std::size_t n = f.n();
  const double dx = f.dx();
  const auto fd = delayed_copies(f, tau);
  const auto gd = delayed_copies(g, -(1.0 - tau));
  const double y0 = -static_cast<double>(n / 2) * dx;
  const auto tw = fft::make_shift_twiddles(n, y0, dx, -1.0 / (2.0 * dx), -1);
  TFMatrix out(signal_grid(f), DomainTag::phase_space);
  parallel_for(n, [&](std::size_t a) {
    cplx* row = &out(a, 0);
    for (std::size_t m = 0; m < n; ++m) row[m] = fd[m * n + a] * std::conj(gd[m * n + a]);
    fft::shifted_dft_rows(std::span<cplx>(row, n), 1, tw);
  });
  return out;
}

}  // namespace tfq
