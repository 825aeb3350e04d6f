// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The tfq Authors

#pragma once

#include <cstdint>
#include <string>

#include "tfq/grid.hpp"

namespace tfq {

// Test-signal recipe on the centered grid x0 = -n dx / 2. The seed drives
// the random tone phases of two_tone; the other kinds are seed independent.
struct SignalRecipe {
  enum class Kind { gaussian, gabor_atom, two_atoms, two_tone, chirp, from_file };
  Kind kind = Kind::gaussian;
  double lambda = 1.0;    // gaussian, gabor_atom
  double t0 = 0.0;        // gabor_atom
  double nu0 = 0.0;       // gabor_atom
  double delta_t = 4.0;   // two_atoms
  double delta_nu = 0.0;  // two_atoms
  double nu1 = 1.0;       // two_tone
  double nu2 = 2.0;       // two_tone
  double rate = 1.0;      // chirp
  std::string path;       // from_file
  std::size_t n = 256;
  double dx = 1.0 / 16.0;
  std::uint64_t seed = 0;
};

SignalRecipe::Kind parse_recipe_kind(const std::string& s);

// Throws GenerationError when the result violates the central-half support.
SampledSignal synth(const SignalRecipe& recipe);

// Unit-energy atom (2 lambda)^{1/4} exp(-pi lambda (x - t0)^2) exp(2 pi i nu0 x).
SampledSignal gabor_atom(double t0, double nu0, double lambda, std::size_t n, double dx);

}  // namespace tfq
