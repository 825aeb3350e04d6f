// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The tfq Authors

#pragma once

#include <cstddef>
#include <functional>
#include <span>

#include "tfq/grid.hpp"
#include "tfq/kernels.hpp"

namespace tfq {

// Dense STFT settings. The window lives on the signal's lattice and is
// applied circularly; centered adds the phase exp(2 pi i x w).
struct StftSpec {
  SampledSignal window;
  bool centered = false;
};

// V_g f(x_a, w_j) = sum_k f_k conj(g(y_k - x_a)) exp(-2 pi i y_k w_j) dx.
TFMatrix stft(const SampledSignal& f, const StftSpec& spec);

// Same values, delivered one row (fixed x_a) at a time in increasing a.
void stft_rows(const SampledSignal& f, const StftSpec& spec,
               const std::function<void(std::size_t, std::span<const cplx>)>& visit);

// Throws AliasingError when f has energy outside the central half window.
void check_central_support(const SampledSignal& f);

// Integer-lag cross-Wigner W(f, g); frequency spacing 1/(n dx), with the
// outer half of the frequency axis (beyond the lag sampling band) set to 0.
TFMatrix wigner(const SampledSignal& f, const SampledSignal& g);

// Cohen-class distribution: W(f, g) filtered by the kernel's multiplier.
TFMatrix cohen(const SampledSignal& f, const SampledSignal& g, const CohenKernel& k);
TFMatrix born_jordan(const SampledSignal& f, const SampledSignal& g);

// Ambiguity-domain filtering of a phase-space matrix, and the variant taking
// the multiplier pre-sampled on the ambiguity grid of m.
TFMatrix cohen_filter(const TFMatrix& m, const CohenKernel& k);
TFMatrix cohen_filter(const TFMatrix& m, const TFMatrix& multiplier);

// tau-Wigner by direct summation over the lag, with band-limited fractional
// delays; tau in [0, 1].
TFMatrix tau_wigner_direct(const SampledSignal& f, const SampledSignal& g, double tau);

namespace detail {
// wigner without the support check.
TFMatrix wigner_unchecked(const SampledSignal& f, const SampledSignal& g);
void check_same_grid(const SampledSignal& f, const SampledSignal& g);
}  // namespace detail

}  // namespace tfq
