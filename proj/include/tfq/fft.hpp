// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The tfq Authors

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace tfq::fft {

using cplx = std::complex<double>;

// Unnormalized in-place transform X_j = sum_k x_k exp(sign 2 pi i jk/n).
void transform(std::span<cplx> data, int sign);

// howmany contiguous transforms of length n, stored back to back.
void transform_rows(std::span<cplx> data, std::size_t n, std::size_t howmany, int sign);

// Transform along both axes of a row-major rows-by-cols array.
void transform_2d(std::span<cplx> data, std::size_t rows, std::size_t cols, int sign);

// out_j = h sum_k in_k exp(sign 2 pi i (a0 + k h)(b0 + j/(n h))).
void shifted_dft(std::span<const cplx> in, double a0, double h, double b0, int sign,
                 std::span<cplx> out);

// Pre/post phase tables of shifted_dft for a fixed axis.
struct ShiftTwiddles {
  std::vector<cplx> pre;
  std::vector<cplx> post;
  int sign = -1;
};
ShiftTwiddles make_shift_twiddles(std::size_t n, double a0, double h, double b0, int sign);

// shifted_dft applied in place to each of the howmany contiguous rows.
void shifted_dft_rows(std::span<cplx> data, std::size_t howmany, const ShiftTwiddles& tw);

// exp(2 pi i t) with the argument reduced exactly before evaluation.
cplx expi2pi(double t);

}  // namespace tfq::fft
