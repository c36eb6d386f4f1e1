#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"

#include "cg/errors.hpp"
#include "cg/quadrature.hpp"

using namespace cg;

TEST_CASE("gauss-kronrod on smooth integrands") {
  QuadResult q = integrate_gk([](double x) { return x * x; }, 0.0, 1.0);
  CHECK(q.converged);
  CHECK(q.value == doctest::Approx(1.0 / 3.0).epsilon(1e-14));

  q = integrate_gk([](double x) { return std::sin(x); }, 0.0, M_PI);
  CHECK(q.value == doctest::Approx(2.0).epsilon(1e-13));

  // Orientation flips the sign.
  q = integrate_gk([](double x) { return std::sin(x); }, M_PI, 0.0);
  CHECK(q.value == doctest::Approx(-2.0).epsilon(1e-13));
}

TEST_CASE("gauss-kronrod resolves a narrow peak") {
  // Narrow relative to the interval but still visible to the top-level
  // rule, so refinement (rather than luck) produces the digits.
  const double s = 0.05;
  QuadResult q = integrate_gk(
      [&](double x) { return std::exp(-x * x / (2 * s * s)); }, -1.0, 1.0,
      1e-12);
  CHECK(q.converged);
  CHECK(q.value ==
        doctest::Approx(std::sqrt(2.0 * M_PI) * s).epsilon(1e-11));
}

TEST_CASE("split rule handles interior kinks") {
  QuadResult q = integrate_gk_split(
      [](double x) { return std::fabs(x); }, -1.0, 2.0, {0.0}, 1e-13);
  CHECK(q.value == doctest::Approx(2.5).epsilon(1e-13));
}

TEST_CASE("tanh-sinh handles endpoint singularities") {
  QuadResult q = integrate_tanh_sinh([](double x) { return std::log(x); },
                                     0.0, 1.0, 1e-12);
  CHECK(q.value == doctest::Approx(-1.0).epsilon(1e-11));

  q = integrate_tanh_sinh([](double x) { return 1.0 / std::sqrt(x); }, 0.0,
                          1.0, 1e-12);
  CHECK(q.value == doctest::Approx(2.0).epsilon(1e-8));

  q = integrate_tanh_sinh([](double x) { return std::exp(x); }, 0.0, 2.0,
                          1e-13);
  CHECK(q.value == doctest::Approx(std::exp(2.0) - 1.0).epsilon(1e-12));
}

TEST_CASE("brent root and minimum") {
  double r = brent_root([](double x) { return std::cos(x); }, 1.0, 2.0);
  CHECK(r == doctest::Approx(M_PI / 2.0).epsilon(1e-12));

  CHECK_THROWS_AS(
      brent_root([](double x) { return 1.0 + x * x; }, -1.0, 1.0), Error);

  double m = brent_min(
      [](double x) { return (x - 1.5) * (x - 1.5) + 2.0; }, 0.0, 4.0);
  CHECK(m == doctest::Approx(1.5).epsilon(1e-8));
}

TEST_CASE("finite differences with Richardson extrapolation") {
  for (int k = 1; k <= 4; ++k) {
    double d = finite_difference([](double x) { return std::exp(x); }, 0.3,
                                 k, 1e-2);
    CHECK(d == doctest::Approx(std::exp(0.3)).epsilon(1e-5));
  }
}
