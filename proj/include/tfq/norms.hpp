// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The tfq Authors

#pragma once

#include <limits>
#include <span>
#include <string>
#include <vector>

#include "tfq/grid.hpp"
#include "tfq/kernels.hpp"
#include "tfq/summation.hpp"

namespace tfq {

inline constexpr double inf = std::numeric_limits<double>::infinity();

struct MixedNormSpec {
  enum class Order { position_inner, frequency_inner };
  MixedNormSpec(double p, double q, Order order = Order::position_inner);
  double p;
  double q;
  Order order;
  // 1/p + 1/p' = 1, with 1 <-> inf.
  static double conjugate(double p);
  double p_conj() const { return conjugate(p); }
  double q_conj() const { return conjugate(q); }
};

// Row-streaming evaluator of the mixed norm; rows are fixed-x slices.
class MixedNormAccumulator {
 public:
  MixedNormAccumulator(const MixedNormSpec& spec, std::size_t nw, double dx, double dw);
  void add_row(std::span<const cplx> row);
  double value() const;

 private:
  MixedNormSpec spec_;
  double dx_;
  double dw_;
  std::vector<CompensatedSum> col_sum_;
  std::vector<double> col_max_;
  CompensatedSum outer_sum_;
  double outer_max_ = 0.0;
};

double mixed_norm(const TFMatrix& m, const MixedNormSpec& spec);

// Unit Gaussian window on the lattice of f.
SampledSignal gaussian_window(const SampledSignal& f);

// Mixed norm of V_phi f with position-inner nesting (the order in spec is ignored).
double modulation_norm(const SampledSignal& f, const MixedNormSpec& spec);
// Same STFT with frequency-inner nesting.
double amalgam_norm(const SampledSignal& f, const MixedNormSpec& spec);

enum class ScalingFamily { gaussian_mod, gaussian_amalgam, bump_amalgam };

struct ScalingPoint {
  double lambda;
  double norm;
  std::size_t n;
  double dx;
};

struct ScalingFit {
  double exponent = 0.0;
  double stderr_ = 0.0;
  double lambda_min = 0.0;
  double lambda_max = 0.0;
  std::size_t points = 0;
  double target = 0.0;
  std::vector<ScalingPoint> table;
};

ScalingFamily parse_family(const std::string& s);
std::string to_string(ScalingFamily f);

// Expected slope for the regime of lam (large: lam >= 8, small: lam <= 1/8).
double scaling_target(ScalingFamily family, const MixedNormSpec& spec, double lam);

// Signal of the family at dilation lam, on the grid chosen by the sweep policy.
SampledSignal scaling_signal(ScalingFamily family, double lam);

ScalingFit scaling_experiment(ScalingFamily family, const MixedNormSpec& spec,
                              const std::vector<double>& lambdas);

std::vector<double> log_spaced(double lo, double hi, std::size_t points);

struct Rect {
  double x_min, x_max, w_min, w_max;
};

struct GhostRow {
  std::string kernel;
  double energy;
  double ratio;
};

// Energy of |M(f, f)|^2 over the region for each kernel, relative to Wigner.
std::vector<GhostRow> ghost_energy_report(const SampledSignal& f,
                                          const std::vector<CohenKernel>& kernels,
                                          const Rect& region);

// Region energy of a phase-space matrix.
double region_energy(const TFMatrix& m, const Rect& region);

}  // namespace tfq
