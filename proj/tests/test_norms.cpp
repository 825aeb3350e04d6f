// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The tfq Authors

#include <cmath>
#include <random>

#include "doctest.h"
#include "test_support.hpp"
#include "tfq/distributions.hpp"
#include "tfq/errors.hpp"
#include "tfq/gaussian_oracles.hpp"
#include "tfq/norms.hpp"
#include "tfq/synth.hpp"

using namespace tfq;
using namespace tfq::testing;

namespace {

using Order = MixedNormSpec::Order;

const std::vector<double>& exponents() {
  static const std::vector<double> e{1.0, 2.0, inf};
  return e;
}

// |V_phi phi|(x, w) = 2^{-1/2} exp(-pi x^2 / 2) exp(-pi w^2 / 2), separable.
double gaussian_mod_norm(double p, double q) {
  auto factor = [](double r) { return std::isinf(r) ? 1.0 : std::pow(2.0 / r, 1.0 / (2.0 * r)); };
  return std::sqrt(0.5) * factor(p) * factor(q);
}

TFMatrix transpose(const TFMatrix& m) {
  const auto& g = m.grid();
  PhaseSpaceGrid t{g.nw, g.nx, g.w0, g.dw, g.x0, g.dx};
  TFMatrix out(t, m.domain_tag());
  for (std::size_t a = 0; a < g.nx; ++a)
    for (std::size_t b = 0; b < g.nw; ++b) out(b, a) = m(a, b);
  return out;
}

SampledSignal phi256() { return sample_gaussian(1.0, 256, centered_origin(256, 1.0 / 16.0), 1.0 / 16.0); }

}  // namespace

TEST_SUITE("norms") {
  TEST_CASE("conjugate exponents and exponent validation") {
    CHECK(MixedNormSpec::conjugate(2.0) == 2.0);
    CHECK(MixedNormSpec::conjugate(1.0) == inf);
    CHECK(MixedNormSpec::conjugate(inf) == 1.0);
    CHECK(MixedNormSpec::conjugate(3.0) == doctest::Approx(1.5));
    CHECK_THROWS_AS(MixedNormSpec(0.5, 2.0), DomainError);
    CHECK_THROWS_AS(MixedNormSpec(2.0, std::nan("")), DomainError);
  }

  TEST_CASE("mixed norm reference values") {
    std::mt19937_64 rng(201);
    const auto g = make_phase_space_grid(64, -4.0, 0.125);
    const auto m = random_smooth_matrix(rng, g, 3);
    CHECK(mixed_norm(m, {2.0, 2.0}) == doctest::Approx(m.l2_norm()).epsilon(1e-12));
    CHECK(mixed_norm(m, {inf, inf}) == max_abs(m.values()));
    TFMatrix one(g, DomainTag::phase_space);
    one(10, 20) = cplx(3.0, 4.0);
    for (double p : {1.0, 2.0, 3.0})
      for (double q : {1.0, 2.0, inf}) {
        const double ref = 5.0 * std::pow(g.dx, 1.0 / p) * (std::isinf(q) ? 1.0 : std::pow(g.dw, 1.0 / q));
        CHECK(mixed_norm(one, {p, q}) == doctest::Approx(ref).epsilon(1e-12));
        CHECK(mixed_norm(TFMatrix(g, DomainTag::phase_space), {p, q}) == 0.0);
      }
  }

  TEST_CASE("nesting orders are related by transposition") {
    std::mt19937_64 rng(203);
    const auto g = make_phase_space_grid(64, -4.0, 0.125);
    const auto m = random_smooth_matrix(rng, g, 4);
    for (double p : exponents())
      for (double q : exponents()) {
        const double a = mixed_norm(m, {p, q, Order::position_inner});
        const double b = mixed_norm(transpose(m), {p, q, Order::frequency_inner});
        CHECK(a == doctest::Approx(b).epsilon(1e-12));
      }
  }

  TEST_CASE("homogeneity and triangle inequality") {
    std::mt19937_64 rng(205);
    const auto g = make_phase_space_grid(64, -4.0, 0.125);
    const cplx alpha(-1.5, 2.0);
    for (int rep = 0; rep < 5; ++rep) {
      const auto a = random_smooth_matrix(rng, g, 3);
      const auto b = random_smooth_matrix(rng, g, 3);
      TFMatrix sum(g, DomainTag::phase_space), scaled(g, DomainTag::phase_space);
      for (std::size_t i = 0; i < sum.values().size(); ++i) {
        sum.values()[i] = a.values()[i] + b.values()[i];
        scaled.values()[i] = alpha * a.values()[i];
      }
      for (double p : exponents())
        for (double q : exponents())
          for (auto order : {Order::position_inner, Order::frequency_inner}) {
            const MixedNormSpec s(p, q, order);
            const double na = mixed_norm(a, s), nb = mixed_norm(b, s);
            CHECK(mixed_norm(scaled, s) == doctest::Approx(std::abs(alpha) * na).epsilon(1e-12));
            CHECK(mixed_norm(sum, s) <= (na + nb) * (1.0 + 1e-12));
          }
    }
  }

  TEST_CASE("modulation norms of the Gaussian") {
    const auto phi = phi256();
    CHECK(modulation_norm(phi, {2.0, 2.0}) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-9));
    for (double p : {1.0, 2.0, 4.0, inf})
      for (double q : {1.0, 3.0, inf}) {
        CAPTURE(p);
        CAPTURE(q);
        CHECK(modulation_norm(phi, {p, q}) == doctest::Approx(gaussian_mod_norm(p, q)).epsilon(1e-8));
      }
    const SampledSignal zero(std::vector<cplx>(256), phi.x0(), phi.dx());
    CHECK(modulation_norm(zero, {2.0, 1.0}) == 0.0);
    CHECK(amalgam_norm(zero, {1.0, inf}) == 0.0);
  }

  TEST_CASE("Gaussian modulation norm is non-increasing in p and q") {
    // The closed form decreases for exponents up to 2e.
    const auto phi = phi256();
    const std::vector<double> ps{1.0, 1.5, 2.0, 3.0, 4.0, 5.0};
    for (std::size_t i = 0; i + 1 < ps.size(); ++i) {
      CHECK(modulation_norm(phi, {ps[i + 1], 2.0}) <= modulation_norm(phi, {ps[i], 2.0}));
      CHECK(modulation_norm(phi, {2.0, ps[i + 1]}) <= modulation_norm(phi, {2.0, ps[i]}));
    }
  }

  TEST_CASE("Fourier transform maps modulation norms to amalgam norms") {
    std::mt19937_64 rng(207);
    for (int rep = 0; rep < 3; ++rep) {
      const auto f = random_band_limited(rng, 256, 1.0 / 16.0);
      const auto fh = dft(f, Direction::forward);
      for (double p : exponents())
        for (double q : exponents()) {
          const double a = modulation_norm(f, {p, q});
          const double b = amalgam_norm(fh, {p, q});
          CHECK(std::abs(a - b) < 1e-6 * a);
        }
    }
  }

  TEST_CASE("scaling sweep reproduces the Gaussian exponent") {
    const auto fit = scaling_experiment(ScalingFamily::gaussian_mod, {2.0, 2.0}, log_spaced(16.0, 256.0, 6));
    CHECK(fit.points == 6);
    CHECK(fit.table.size() == 6);
    CHECK(fit.target == -0.25);
    CHECK(std::abs(fit.exponent + 0.25) < 0.03);
    CHECK(fit.stderr_ < 0.05);
    for (const auto& r : fit.table) CHECK(r.dx == doctest::Approx(1.0 / (16.0 * std::sqrt(r.lambda))));
  }

  TEST_CASE("scaling preconditions") {
    CHECK_THROWS_AS(scaling_experiment(ScalingFamily::gaussian_mod, {2.0, 2.0}, log_spaced(16.0, 64.0, 5)),
                    DomainError);
    CHECK_THROWS_AS(scaling_experiment(ScalingFamily::gaussian_mod, {2.0, 2.0}, log_spaced(1.0, 64.0, 6)),
                    DomainError);
    try {
      scaling_signal(ScalingFamily::gaussian_mod, 1e-6);
      FAIL("expected a resolution error");
    } catch (const ResolutionError& e) {
      CHECK(e.lambda() == 1e-6);
    }
    CHECK(parse_family(to_string(ScalingFamily::bump_amalgam)) == ScalingFamily::bump_amalgam);
    CHECK_THROWS_AS(parse_family("gauss"), DomainError);
    CHECK(scaling_target(ScalingFamily::gaussian_mod, {1.0, inf}, 1.0 / 64.0) == -0.5);
    CHECK(scaling_target(ScalingFamily::bump_amalgam, {inf, 1.0}, 64.0) == -0.5);
    CHECK(scaling_target(ScalingFamily::gaussian_amalgam, {2.0, 4.0}, 1.0 / 64.0) == -0.125);
  }

  TEST_CASE("ghost energy report") {
    SignalRecipe r;
    r.kind = SignalRecipe::Kind::two_atoms;
    r.n = 512;
    r.dx = 1.0 / 16.0;
    const auto f = synth(r);
    const double dw = 1.0 / (512.0 / 16.0);
    const Rect region{-2.0 * r.dx, 2.0 * r.dx, -2.0 * dw, 2.0 * dw};
    const auto rows =
        ghost_energy_report(f, {CohenKernel::delta(), CohenKernel::born_jordan(), CohenKernel::tau(0.0)}, region);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].kernel == "delta");
    CHECK(rows[0].ratio == 1.0);
    CHECK(rows[0].energy > 0.0);
    CHECK(rows[1].ratio < 0.5);
    // tau(0) moves the cross term away from the midpoint entirely
    CHECK(rows[2].ratio < 1e-6);
    CHECK_THROWS_AS(ghost_energy_report(f, {CohenKernel::delta()}, {-100.0, 0.0, 0.0, 1.0}), DomainError);
  }
}
