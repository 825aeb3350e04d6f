// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The tfq Authors

#include "tfq/fft.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <tuple>
#include <vector>

namespace tfq::fft {
namespace {

// Plans are created once per shape and reused; only creation needs the lock,
// fftw_execute_dft is thread safe.
using PlanKey = std::tuple<int, std::size_t, std::size_t, std::size_t, int>;

std::mutex& plan_mutex() {
  static std::mutex m;
  return m;
}

std::map<PlanKey, fftw_plan>& plan_cache() {
  static std::map<PlanKey, fftw_plan> cache;
  return cache;
}

fftw_plan get_plan(int kind, std::size_t a, std::size_t b, std::size_t c, int sign) {
  std::lock_guard<std::mutex> lock(plan_mutex());
  auto& cache = plan_cache();
  PlanKey key{kind, a, b, c, sign};
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  const int fsign = sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD;
  const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
  std::vector<cplx> scratch(a * b);
  auto* buf = reinterpret_cast<fftw_complex*>(scratch.data());
  fftw_plan plan = nullptr;
  if (kind == 0) {
    // b rows of length a
    int n = static_cast<int>(a);
    plan = fftw_plan_many_dft(1, &n, static_cast<int>(b), buf, nullptr, 1, n, buf,
                              nullptr, 1, n, fsign, flags);
  } else {
    plan = fftw_plan_dft_2d(static_cast<int>(a), static_cast<int>(b), buf, buf, fsign, flags);
  }
  (void)c;
  cache.emplace(key, plan);
  return plan;
}

}  // namespace

void transform(std::span<cplx> data, int sign) {
  transform_rows(data, data.size(), 1, sign);
}

void transform_rows(std::span<cplx> data, std::size_t n, std::size_t howmany, int sign) {
  if (n == 0 || howmany == 0) return;
  fftw_plan plan = get_plan(0, n, howmany, 0, sign);
  auto* buf = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(plan, buf, buf);
}

void transform_2d(std::span<cplx> data, std::size_t rows, std::size_t cols, int sign) {
  if (rows == 0 || cols == 0) return;
  fftw_plan plan = get_plan(1, rows, cols, 0, sign);
  auto* buf = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(plan, buf, buf);
}

cplx expi2pi(double t) {
  const double r = t - std::nearbyint(t);
  if (r == 0.0) return {1.0, 0.0};
  if (r == 0.5 || r == -0.5) return {-1.0, 0.0};
  if (r == 0.25) return {0.0, 1.0};
  if (r == -0.25) return {0.0, -1.0};
  const double a = 2.0 * std::numbers::pi * r;
  return {std::cos(a), std::sin(a)};
}

ShiftTwiddles make_shift_twiddles(std::size_t n, double a0, double h, double b0, int sign) {
  ShiftTwiddles tw;
  tw.sign = sign;
  tw.pre.resize(n);
  tw.post.resize(n);
  const double s = sign < 0 ? -1.0 : 1.0;
  const double delta = 1.0 / (static_cast<double>(n) * h);
  const double hb0 = h * b0;
  const double a0d = a0 * delta;
  const cplx c = h * expi2pi(s * a0 * b0);
  for (std::size_t k = 0; k < n; ++k) {
    tw.pre[k] = expi2pi(s * static_cast<double>(k) * hb0);
    tw.post[k] = c * expi2pi(s * static_cast<double>(k) * a0d);
  }
  return tw;
}

void shifted_dft_rows(std::span<cplx> data, std::size_t howmany, const ShiftTwiddles& tw) {
  const std::size_t n = tw.pre.size();
  for (std::size_t r = 0; r < howmany; ++r) {
    cplx* row = data.data() + r * n;
    for (std::size_t k = 0; k < n; ++k) row[k] *= tw.pre[k];
  }
  transform_rows(data.first(n * howmany), n, howmany, tw.sign);
  for (std::size_t r = 0; r < howmany; ++r) {
    cplx* row = data.data() + r * n;
    for (std::size_t k = 0; k < n; ++k) row[k] *= tw.post[k];
  }
}

void shifted_dft(std::span<const cplx> in, double a0, double h, double b0, int sign,
                 std::span<cplx> out) {
  const ShiftTwiddles tw = make_shift_twiddles(in.size(), a0, h, b0, sign);
  for (std::size_t k = 0; k < in.size(); ++k) out[k] = in[k];
  shifted_dft_rows(out, 1, tw);
}

}  // namespace tfq::fft
