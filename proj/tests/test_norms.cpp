#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"

#include "cg/equilibrium.hpp"
#include "cg/errors.hpp"
#include "cg/norms.hpp"
#include "cg/potential.hpp"

using namespace cg;

namespace {

const double kSqrt3 = std::sqrt(3.0);

double lgamma_safe(double x) { return std::lgamma(x); }

// Closed form for q(r) = r^2: u_j = j! / (2 n^{j+1}).
double gaussian_log_u(long j, long n) {
  return lgamma_safe(double(j) + 1.0) - std::log(2.0) -
         double(j + 1) * std::log(double(n));
}

}  // namespace

TEST_CASE("exact norms match the Gaussian closed form") {
  PolyLogPotential q = PolyLogPotential::quadratic(1.0);
  Droplet d = find_droplet(q);
  for (long n : {3L, 17L, 120L}) {
    auto tab = norm_table(q, d, nullptr, n);
    for (long j = 0; j < n; ++j)
      CHECK(tab[size_t(j)] ==
            doctest::Approx(gaussian_log_u(j, n)).epsilon(1e-11));
  }
}

TEST_CASE("norm table is independent of the thread count") {
  PolyLogPotential q = PolyLogPotential::cubic(kSqrt3, 1.0);
  Droplet d = find_droplet(q);
  CriticalityData c = detect_criticality(q, d);
  auto t1 = norm_table(q, d, &c, 200, {}, 1);
  auto t4 = norm_table(q, d, &c, 200, {}, 4);
  REQUIRE(t1.size() == t4.size());
  for (size_t j = 0; j < t1.size(); ++j) CHECK(t1[j] == t4[j]);
}

TEST_CASE("bulk asymptotic approaches the exact norm") {
  PolyLogPotential q = PolyLogPotential::quadratic(1.0);
  Droplet d = find_droplet(q);
  const long j = 500;
  double err_prev = 1e9;
  for (long n : {1000L, 4000L}) {
    NormEntry ex = log_norm_exact(q, d, nullptr, j * n / 1000, n);
    NormEntry bu = log_norm_bulk_asym(q, d, nullptr, j * n / 1000, n);
    const double err = std::fabs(ex.log_u - bu.log_u);
    CHECK(err < err_prev);
    CHECK(err < 1e-3);
    err_prev = err;
  }
}

TEST_CASE("critical asymptotic error decays near the ring") {
  PolyLogPotential q = PolyLogPotential::cubic(kSqrt3, 1.0);
  Droplet d = find_droplet(q);
  CriticalityData c = detect_criticality(q, d);
  const long n = 4000;
  const long j = long(double(n) * c.tau_star);
  NormEntry ex = log_norm_exact(q, d, &c, j, n);
  NormEntry cr = log_norm_critical_asym(q, d, c, j, n);
  CHECK(std::fabs(ex.log_u - cr.log_u) < 0.15);
  CHECK(cr.x == doctest::Approx(ex.x).epsilon(1e-12));
}

TEST_CASE("origin asymptotic covers the lowest indices") {
  // Needs q'(0) = 0 and q''(0) > 0; the cubic is tilted at the origin.
  PolyLogPotential q({0.0, 0.0, 1.0, 0.0, 0.25});  // r^2 + r^4/4
  Droplet d = find_droplet(q);
  const long n = 4000;
  for (long j : {0L, 1L, 2L}) {
    NormEntry ex = log_norm_exact(q, d, nullptr, j, n);
    NormEntry org = log_norm_origin_asym(q, d, j, n);
    CHECK(std::fabs(ex.log_u - org.log_u) < 5e-2);
  }
  // Not applicable to potentials with q'(0) != 0.
  PolyLogPotential tilt = PolyLogPotential::cubic(kSqrt3, 1.0);
  CHECK_THROWS_AS(log_norm_origin_asym(tilt, find_droplet(tilt), 0, 100),
                  Error);
}

TEST_CASE("regime classifier picks sensible regimes") {
  PolyLogPotential flat({0.0, 0.0, 1.0, 0.0, 0.25});
  CHECK(classify_regime(flat, find_droplet(flat), nullptr, 0, 4000) ==
        Regime::origin);

  PolyLogPotential q = PolyLogPotential::cubic(kSqrt3, 1.0);
  Droplet d = find_droplet(q);
  CriticalityData c = detect_criticality(q, d);
  const long n = 4000;
  // A tight margin keeps the log n index window from covering the whole
  // droplet at desk-scale n.
  CHECK(classify_regime(q, d, &c, long(n * c.tau_star), n, 0.2) ==
        Regime::critical);
  CHECK(classify_regime(q, d, &c, n / 2, n, 0.2) == Regime::bulk);
  CHECK(classify_regime(q, d, &c, n - 1, n, 0.2) == Regime::bulk);
}

TEST_CASE("Euler-Maclaurin reproduces polynomial sums exactly") {
  // sum_{i=1}^{100} i^3 = (100 * 101 / 2)^2.
  auto f = [](double x, int d) -> double {
    switch (d) {
      case 0: return x * x * x;
      case 1: return 3.0 * x * x;
      case 2: return 6.0 * x;
      case 3: return 6.0;
      default: return 0.0;
    }
  };
  EulerMaclaurinResult r = euler_maclaurin(f, 1, 100, 2);
  CHECK(r.value == doctest::Approx(25502500.0).epsilon(1e-12));
}

TEST_CASE("Euler-Maclaurin error bound covers the true error") {
  auto f = [](double x, int d) -> double {
    const double s = 0.05;
    double v = std::exp(-s * x);
    for (int i = 0; i < d; ++i) v *= -s;
    return v;
  };
  const double s = 0.05;
  double truth = 0.0;
  for (int i = 0; i <= 200; ++i) truth += std::exp(-s * i);
  std::function<double(double)> d4 = [s](double x) {
    return s * s * s * s * std::exp(-s * x);
  };
  EulerMaclaurinResult r = euler_maclaurin(f, 0, 200, 2, &d4);
  CHECK(std::fabs(r.value - truth) <= r.error_bound + 1e-12);
  CHECK(std::fabs(r.value - truth) < 1e-8);
}
