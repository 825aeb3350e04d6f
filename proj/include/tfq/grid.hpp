// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The tfq Authors

#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

namespace tfq {

using cplx = std::complex<double>;

bool is_power_of_two(std::size_t n);

// Uniformly sampled signal on x_k = x0 + k*dx, k = 0..n-1.
class SampledSignal {
 public:
  SampledSignal(std::vector<cplx> samples, double x0, double dx);

  std::size_t n() const { return samples_.size(); }
  double x0() const { return x0_; }
  double dx() const { return dx_; }
  double x(std::size_t k) const { return x0_ + static_cast<double>(k) * dx_; }
  const std::vector<cplx>& samples() const { return samples_; }
  const cplx& operator[](std::size_t k) const { return samples_[k]; }

  // Sum |f_k|^2 dx, compensated.
  double energy() const;

 private:
  std::vector<cplx> samples_;
  double x0_;
  double dx_;
};

struct PhaseSpaceGrid {
  std::size_t nx = 0;
  std::size_t nw = 0;
  double x0 = 0.0;
  double dx = 1.0;
  double w0 = 0.0;
  double dw = 1.0;

  double x(std::size_t a) const { return x0 + static_cast<double>(a) * dx; }
  double w(std::size_t b) const { return w0 + static_cast<double>(b) * dw; }
  // dx*dw*nx == 1 and nx == nw.
  bool dft_compatible(double rel_tol = 1e-12) const;
  bool operator==(const PhaseSpaceGrid& o) const = default;
};

// Square grid with dw = 1/(n dx) and centered frequency axis.
PhaseSpaceGrid make_phase_space_grid(std::size_t n, double x0, double dx);

enum class DomainTag { phase_space, ambiguity };

// Row-major nx-by-nw complex matrix; row index runs along x, column along w.
class TFMatrix {
 public:
  TFMatrix(PhaseSpaceGrid grid, DomainTag tag);
  TFMatrix(PhaseSpaceGrid grid, DomainTag tag, std::vector<cplx> values);

  const PhaseSpaceGrid& grid() const { return grid_; }
  DomainTag domain_tag() const { return tag_; }
  std::size_t rows() const { return grid_.nx; }
  std::size_t cols() const { return grid_.nw; }

  cplx& operator()(std::size_t a, std::size_t b) { return values_[a * grid_.nw + b]; }
  const cplx& operator()(std::size_t a, std::size_t b) const {
    return values_[a * grid_.nw + b];
  }
  std::vector<cplx>& values() { return values_; }
  const std::vector<cplx>& values() const { return values_; }

  // sqrt(sum |m|^2 dx dw), compensated.
  double l2_norm() const;

 private:
  PhaseSpaceGrid grid_;
  DomainTag tag_;
  std::vector<cplx> values_;
};

enum class Direction { forward, inverse };

// Riemann-sum Fourier transform with exp(-2 pi i x w) on forward. The output
// spacing is 1/(n dx); its origin defaults to -n*dw/2.
SampledSignal dft(const SampledSignal& f, Direction dir,
                  std::optional<double> out_origin = std::nullopt);

// F_s F(z1, z2) = sum F(x, w) exp(-2 pi i (x z2 - w z1)) dx dw.
// Output rows run along z1 (spacing dx), columns along z2 (spacing dw).
// Without an explicit target origin both output axes are centered.
TFMatrix symplectic_fourier(const TFMatrix& m);
TFMatrix symplectic_fourier(const TFMatrix& m, double out_x0, double out_w0);

// Periodic convolution (F*G)(z) = sum_y F(z - y) G(y) dx dw, returned on the
// grid of F. G must share spacings and counts with F and have origins that
// are integer multiples of them.
TFMatrix circular_convolve(const TFMatrix& f, const TFMatrix& g);

}  // namespace tfq
