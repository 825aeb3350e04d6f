// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The tfq Authors

#include <cmath>

#include "doctest.h"
#include "test_support.hpp"
#include "tfq/errors.hpp"
#include "tfq/special_functions.hpp"

using namespace tfq;
using namespace tfq::testing;

TEST_SUITE("special_functions") {
  TEST_CASE("sinc values") {
    CHECK(sinc(0.0) == 1.0);
    CHECK(sinc(0.5) == doctest::Approx(2.0 / pi).epsilon(1e-15));
    CHECK(std::abs(sinc(0.5) - 0.636619772) < 1e-9);
    for (int k = 1; k <= 1000; k += 37) {
      CHECK(std::abs(sinc(k)) < 1e-15);
      CHECK(std::abs(sinc(-k)) < 1e-15);
    }
    for (double t : {0.1, 0.77, 3.3, 12.01}) CHECK(sinc(t) == sinc(-t));
  }

  TEST_CASE("sin_pi and cos_pi reduce exactly") {
    CHECK(sin_pi(1e6) == 0.0);
    CHECK(cos_pi(1e6 + 0.5) == 0.0);
    CHECK(cos_pi(3.0) == -1.0);
    CHECK(sin_pi(0.25) == doctest::Approx(std::sqrt(0.5)));
  }

  TEST_CASE("Ci small-argument law") {
    CHECK(std::abs(cosine_integral(1e-6) - std::log(1e-6) - 0.5772156649) < 1e-8);
  }

  TEST_CASE("Ci matches the brute-force oscillatory oracle") {
    for (double t : {0.01, 0.1, 1.0, 10.0, 100.0, 1000.0}) {
      const double ref = ci_bruteforce(t);
      CAPTURE(t);
      CHECK(std::abs(cosine_integral(t) - ref) < 1e-9);
    }
    CHECK(std::abs(cosine_integral(100.0)) < 0.02);
  }

  TEST_CASE("Ci routing by branch") {
    CHECK(cosine_integral_eval(0.5).method_tag == CiMethod::series);
    CHECK(cosine_integral_eval(4.0).method_tag == CiMethod::series);
    CHECK(cosine_integral_eval(8.0).method_tag == CiMethod::quadrature);
    CHECK(cosine_integral_eval(20.0).method_tag == CiMethod::quadrature);
    CHECK(cosine_integral_eval(32.0).method_tag == CiMethod::asymptotic);
    CHECK_THROWS_AS(cosine_integral_eval(5.0, CiMethod::series), DomainError);
    CHECK_THROWS_AS(cosine_integral_eval(20.0, CiMethod::asymptotic), DomainError);
    CHECK_THROWS_AS(cosine_integral(0.0), DomainError);
    CHECK_THROWS_AS(cosine_integral(-1.0), DomainError);
  }

  TEST_CASE("branches agree on their overlaps") {
    for (double t = 0.1; t <= 4.0; t += 0.0775) {
      const double s = cosine_integral_eval(t, CiMethod::series).value;
      const double q = cosine_integral_eval(t, CiMethod::quadrature).value;
      CHECK(std::abs(s - q) < 1e-10);
      CHECK(std::abs(sine_integral(t, CiMethod::series) - sine_integral(t, CiMethod::quadrature)) < 1e-10);
    }
    for (double t = 32.0; t <= 2000.0; t *= 1.21) {
      const double a = cosine_integral_eval(t, CiMethod::asymptotic).value;
      const double q = cosine_integral_eval(t, CiMethod::quadrature).value;
      CHECK(std::abs(a - q) < 1e-9);
    }
  }

  TEST_CASE("Ci decays inside the 2/t envelope") {
    for (double t = 10.0; t <= 1e4; t *= 1.07) CHECK(std::abs(cosine_integral(t)) <= 2.0 / t);
  }

  TEST_CASE("Si reference values") {
    CHECK(sine_integral(1.0) == doctest::Approx(0.9460830703671830).epsilon(1e-14));
    CHECK(sine_integral(-1.0) == doctest::Approx(-0.9460830703671830).epsilon(1e-14));
    CHECK(std::abs(sine_integral(1e4) - pi / 2.0) < 1e-4);
  }
}
