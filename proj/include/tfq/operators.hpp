// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The tfq Authors

#pragma once

#include <string>
#include <vector>

#include "tfq/grid.hpp"
#include "tfq/kernels.hpp"

namespace tfq {

// Phase-space symbol on a DFT-compatible grid.
class Symbol {
 public:
  explicit Symbol(TFMatrix values);
  const TFMatrix& values() const { return values_; }
  const PhaseSpaceGrid& grid() const { return values_.grid(); }

 private:
  TFMatrix values_;
};

class QuantizationRule {
 public:
  enum class Kind { weyl, tau, born_jordan };
  static QuantizationRule weyl() { return QuantizationRule(Kind::weyl, 0.5); }
  static QuantizationRule tau(double t);
  static QuantizationRule born_jordan() { return QuantizationRule(Kind::born_jordan, 0.0); }

  Kind kind() const { return kind_; }
  // Weyl maps to Tau(1/2), so the two share every code path.
  CohenKernel kernel() const;
  std::string name() const;

 private:
  QuantizationRule(Kind k, double t) : kind_(k), tau_(t) {}
  Kind kind_;
  double tau_;
};

// <a, D(g, f)> = sum a conj(D(g, f)) dx dw, D the rule's distribution.
cplx weak_apply(const Symbol& a, const QuantizationRule& rule, const SampledSignal& f,
                const SampledSignal& g);

// (Op(a) f)_k = weak_apply(a, rule, f, e_k) / dx with e_k the unit sample.
SampledSignal apply(const Symbol& a, const QuantizationRule& rule, const SampledSignal& f);

// Dense n-by-n row-major matrix of Op(a) on the signal grid of a.
std::vector<cplx> operator_matrix(const Symbol& a, const QuantizationRule& rule);

// A a = a * theta_sigma, via the sinc(z1 z2) multiplier.
Symbol symbol_transform(const Symbol& a);

// (a o J)(x, w) = a(w, -x) on a centered grid with dx == dw.
Symbol compose_J(const Symbol& a);

Symbol conj(const Symbol& a);

}  // namespace tfq
