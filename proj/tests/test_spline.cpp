#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <vector>

#include "doctest.h"

#include "cg/spline.hpp"

using namespace cg;

namespace {

std::vector<double> linspace(double a, double b, int k) {
  std::vector<double> v(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i)
    v[size_t(i)] = a + (b - a) * double(i) / double(k - 1);
  return v;
}

}  // namespace

TEST_CASE("natural spline interpolates and differentiates sin") {
  auto xs = linspace(0.0, M_PI, 41);
  std::vector<double> ys;
  for (double x : xs) ys.push_back(std::sin(x));
  CubicSpline s(xs, ys);
  for (double x : xs) CHECK(s(x) == doctest::Approx(std::sin(x)).epsilon(1e-13));
  for (double x : linspace(0.2, 3.0, 17)) {
    CHECK(s(x) == doctest::Approx(std::sin(x)).epsilon(1e-5));
    CHECK(s.eval(x, 1) == doctest::Approx(std::cos(x)).epsilon(1e-3));
  }
  CHECK(s.integral_from_start(M_PI) == doctest::Approx(2.0).epsilon(1e-6));
}

TEST_CASE("pchip preserves monotonicity of sigmoid data") {
  auto xs = linspace(-6.0, 6.0, 25);
  std::vector<double> ys;
  for (double x : xs) ys.push_back(1.0 / (1.0 + std::exp(-3.0 * x)));
  CubicSpline s = CubicSpline::pchip(xs, ys);
  for (double x : xs) CHECK(s(x) == doctest::Approx(ys[0] * 0 + 1.0 / (1.0 + std::exp(-3.0 * x))).epsilon(1e-12));
  double prev = s(-6.0);
  for (double x : linspace(-6.0, 6.0, 2001)) {
    const double v = s(x);
    CHECK(v >= prev - 1e-14);
    CHECK(s.eval(x, 1) >= -1e-14);
    prev = v;
  }
}

TEST_CASE("pchip stays flat on flat tails") {
  // A CDF-like table with long exactly-flat stretches: the interpolant must
  // not overshoot outside [0, 1].
  std::vector<double> xs = linspace(0.0, 10.0, 21);
  std::vector<double> ys(xs.size(), 0.0);
  for (size_t i = 0; i < xs.size(); ++i) {
    if (xs[i] > 4.0 && xs[i] < 6.0) ys[i] = (xs[i] - 4.0) / 2.0;
    if (xs[i] >= 6.0) ys[i] = 1.0;
  }
  CubicSpline s = CubicSpline::pchip(xs, ys);
  for (double x : linspace(0.0, 10.0, 4001)) {
    CHECK(s(x) >= -1e-15);
    CHECK(s(x) <= 1.0 + 1e-15);
  }
}
