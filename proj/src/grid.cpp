// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The tfq Authors

#include "tfq/grid.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "tfq/errors.hpp"
#include "tfq/fft.hpp"
#include "tfq/summation.hpp"

namespace tfq {
namespace {

bool close_rel(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max(std::abs(a), std::abs(b));
}

// Integer k with origin == k*spacing, or a grid error.
long integer_offset(double origin, double spacing, const char* what) {
  const double r = origin / spacing;
  const double k = std::nearbyint(r);
  if (std::abs(r - k) > 1e-9) throw GridError(std::string(what) + " is not on the sample lattice");
  return static_cast<long>(k);
}

std::size_t wrap(long i, std::size_t n) {
  const long m = static_cast<long>(n);
  long r = i % m;
  if (r < 0) r += m;
  return static_cast<std::size_t>(r);
}

}  // namespace

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

SampledSignal::SampledSignal(std::vector<cplx> samples, double x0, double dx)
    : samples_(std::move(samples)), x0_(x0), dx_(dx) {
  if (!(dx_ > 0.0) || !std::isfinite(dx_)) throw GridError("dx must be positive and finite");
  if (!std::isfinite(x0_)) throw GridError("x0 must be finite");
  if (samples_.size() < 8 || !is_power_of_two(samples_.size()))
    throw SizeError("sample count must be a power of two >= 8, got " +
                    std::to_string(samples_.size()));
}

double SampledSignal::energy() const {
  CompensatedSum s;
  for (const auto& v : samples_) s.add(std::norm(v));
  return s.value() * dx_;
}

bool PhaseSpaceGrid::dft_compatible(double rel_tol) const {
  if (nx != nw || nx == 0) return false;
  return std::abs(dx * dw * static_cast<double>(nx) - 1.0) <= rel_tol;
}

PhaseSpaceGrid make_phase_space_grid(std::size_t n, double x0, double dx) {
  if (!is_power_of_two(n) || n < 8) throw SizeError("grid size must be a power of two >= 8");
  if (!(dx > 0.0)) throw GridError("dx must be positive");
  PhaseSpaceGrid g;
  g.nx = g.nw = n;
  g.x0 = x0;
  g.dx = dx;
  g.dw = 1.0 / (static_cast<double>(n) * dx);
  g.w0 = -static_cast<double>(n) * g.dw / 2.0;
  return g;
}

TFMatrix::TFMatrix(PhaseSpaceGrid grid, DomainTag tag)
    : grid_(grid), tag_(tag), values_(grid.nx * grid.nw) {}

TFMatrix::TFMatrix(PhaseSpaceGrid grid, DomainTag tag, std::vector<cplx> values)
    : grid_(grid), tag_(tag), values_(std::move(values)) {
  if (values_.size() != grid_.nx * grid_.nw)
    throw SizeError("matrix values do not match grid dimensions");
}

double TFMatrix::l2_norm() const {
  CompensatedSum s;
  for (const auto& v : values_) s.add(std::norm(v));
  return std::sqrt(s.value() * grid_.dx * grid_.dw);
}

SampledSignal dft(const SampledSignal& f, Direction dir, std::optional<double> out_origin) {
  const std::size_t n = f.n();
  const double delta = 1.0 / (static_cast<double>(n) * f.dx());
  const double b0 = out_origin.value_or(-static_cast<double>(n) * delta / 2.0);
  const int sign = dir == Direction::forward ? -1 : 1;
  std::vector<cplx> out(n);
  fft::shifted_dft(f.samples(), f.x0(), f.dx(), b0, sign, out);
  return SampledSignal(std::move(out), b0, delta);
}

TFMatrix symplectic_fourier(const TFMatrix& m) {
  const auto& g = m.grid();
  const double c1 = -static_cast<double>(g.nw) / (2.0 * static_cast<double>(g.nw) * g.dw);
  const double c2 = -static_cast<double>(g.nx) / (2.0 * static_cast<double>(g.nx) * g.dx);
  return symplectic_fourier(m, c1, c2);
}

TFMatrix symplectic_fourier(const TFMatrix& m, double out_x0, double out_w0) {
  const auto& g = m.grid();
  if (!g.dft_compatible()) throw GridError("symplectic_fourier needs nx == nw and dx*dw*n == 1");
  const std::size_t n = g.nx;

  // Along w with sign +, dual variable z1 (output rows).
  std::vector<cplx> work = m.values();
  const auto tw_w = fft::make_shift_twiddles(n, g.w0, g.dw, out_x0, +1);
  fft::shifted_dft_rows(work, n, tw_w);

  // Transpose so each row holds one z1 and runs along x.
  std::vector<cplx> t(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t j = 0; j < n; ++j) t[j * n + a] = work[a * n + j];

  // Along x with sign -, dual variable z2 (output columns).
  const auto tw_x = fft::make_shift_twiddles(n, g.x0, g.dx, out_w0, -1);
  fft::shifted_dft_rows(t, n, tw_x);

  PhaseSpaceGrid og;
  og.nx = og.nw = n;
  og.x0 = out_x0;
  og.dx = 1.0 / (static_cast<double>(n) * g.dw);
  og.w0 = out_w0;
  og.dw = 1.0 / (static_cast<double>(n) * g.dx);
  const DomainTag tag =
      m.domain_tag() == DomainTag::phase_space ? DomainTag::ambiguity : DomainTag::phase_space;
  return TFMatrix(og, tag, std::move(t));
}

TFMatrix circular_convolve(const TFMatrix& f, const TFMatrix& g) {
  const auto& fg = f.grid();
  const auto& gg = g.grid();
  if (fg.nx != gg.nx || fg.nw != gg.nw || !close_rel(fg.dx, gg.dx, 1e-12) ||
      !close_rel(fg.dw, gg.dw, 1e-12))
    throw GridError("convolution operands must share counts and spacings");
  const long o1 = integer_offset(gg.x0, gg.dx, "kernel x origin");
  const long o2 = integer_offset(gg.w0, gg.dw, "kernel w origin");
  const std::size_t nx = fg.nx;
  const std::size_t nw = fg.nw;

  std::vector<cplx> a = f.values();
  std::vector<cplx> b = g.values();
  fft::transform_2d(a, nx, nw, -1);
  fft::transform_2d(b, nx, nw, -1);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] *= b[i];
  fft::transform_2d(a, nx, nw, +1);

  const double scale = fg.dx * fg.dw / static_cast<double>(nx * nw);
  TFMatrix out(fg, f.domain_tag());
  for (std::size_t r = 0; r < nx; ++r) {
    const std::size_t sr = wrap(static_cast<long>(r) - o1, nx);
    for (std::size_t c = 0; c < nw; ++c) {
      const std::size_t sc = wrap(static_cast<long>(c) - o2, nw);
      out(r, c) = a[sr * nw + sc] * scale;
    }
  }
  return out;
}

}  // namespace tfq
