#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <complex>

#include "doctest.h"

#include "cg/equilibrium.hpp"
#include "cg/kernel.hpp"
#include "cg/norms.hpp"
#include "cg/potential.hpp"

using namespace cg;

namespace {

const double kSqrt3 = std::sqrt(3.0);

struct Fixture {
  PolyLogPotential pot;
  Droplet droplet;
  CriticalityData crit;
  std::vector<double> log_u;
  long n;
  Fixture(long n_in)
      : pot(PolyLogPotential::cubic(kSqrt3, 1.0)),
        droplet(find_droplet(pot)),
        crit(detect_criticality(pot, droplet)),
        log_u(norm_table(pot, droplet, &crit, n_in)),
        n(n_in) {}
};

}  // namespace

TEST_CASE("Ginibre kernel closed form") {
  PolyLogPotential q = PolyLogPotential::quadratic(1.0);
  Droplet d = find_droplet(q);
  const long n = 60;
  auto tab = norm_table(q, d, nullptr, n);
  // K(0, 0) = n exactly (only j = 0 contributes).
  KernelValue v0 = kernel_full(q, tab, n, 0.0, 0.0);
  CHECK(v0.modulus == doctest::Approx(double(n)).epsilon(1e-11));
  // Deep in the bulk, K(z, z) ~ n (density 1/pi under the dA/pi count
  // convention).
  KernelValue vb = kernel_full(q, tab, n, {0.4, 0.1}, {0.4, 0.1});
  CHECK(vb.modulus == doctest::Approx(double(n)).epsilon(1e-6));
  // Radial symmetry of the diagonal.
  KernelValue va = kernel_full(q, tab, n, {0.0, std::sqrt(0.17)},
                               {0.0, std::sqrt(0.17)});
  KernelValue vc = kernel_full(q, tab, n, {std::sqrt(0.17), 0.0},
                               {std::sqrt(0.17), 0.0});
  CHECK(va.modulus == doctest::Approx(vc.modulus).epsilon(1e-12));
}

TEST_CASE("kernel is Hermitian") {
  Fixture f(300);
  const std::complex<double> z1{0.55, 0.10}, z2{0.62, -0.05};
  KernelValue k12 = kernel_full(f.pot, f.log_u, f.n, z1, z2);
  KernelValue k21 = kernel_full(f.pot, f.log_u, f.n, z2, z1);
  CHECK(k12.modulus == doctest::Approx(k21.modulus).epsilon(1e-12));
  CHECK(k12.phase == doctest::Approx(-k21.phase).epsilon(1e-12));
  KernelValue diag = kernel_full(f.pot, f.log_u, f.n, z1, z1);
  CHECK(diag.phase == doctest::Approx(0.0));
  CHECK(diag.modulus > 0.0);
}

TEST_CASE("window truncation is harmless on the ring") {
  Fixture f(1000);
  const std::complex<double> z{f.crit.r_star, 0.0};
  KernelValue full = kernel_full(f.pot, f.log_u, f.n, z, z);
  KernelValue win = kernel_windowed(f.pot, f.droplet, f.crit, f.log_u, f.n,
                                    z, z, 2.0);
  CHECK(win.truncated);
  CHECK(std::fabs(win.modulus - full.modulus) / full.modulus < 1e-6);
}

TEST_CASE("expected counts integrate the kernel diagonal") {
  PolyLogPotential q = PolyLogPotential::quadratic(1.0);
  Droplet d = find_droplet(q);
  const long n = 20;
  auto tab = norm_table(q, d, nullptr, n);
  // Whole plane: the count telescopes to n under the dA/pi convention.
  CHECK(expected_count(q, tab, n, 0.0, 6.0) ==
        doctest::Approx(double(n)).epsilon(1e-8));
  // Small bulk disk: density n/pi times area pi s^2.
  const double s = 0.05;
  CHECK(expected_count(q, tab, n, 0.5, s) ==
        doctest::Approx(double(n) * s * s).epsilon(1e-3));
  CHECK(expected_count(q, tab, n, 0.5, 0.0) == doctest::Approx(0.0));
}

TEST_CASE("double-scaling error shrinks with n") {
  Fixture f1k(1000);
  Fixture f4k(4000);
  for (const std::complex<double> xi :
       {std::complex<double>{0, 0}, {1, 0}, {-1, 0}, {1, 1}}) {
    const double e1 = double_scaling_error(f1k.pot, f1k.droplet, f1k.crit,
                                           f1k.log_u, f1k.n, xi, xi);
    const double e4 = double_scaling_error(f4k.pot, f4k.droplet, f4k.crit,
                                           f4k.log_u, f4k.n, xi, xi);
    CHECK(e4 < e1);
  }
}

TEST_CASE("mean level spacing solves the unit-count equation") {
  Fixture f(500);
  SpacingResult s = mean_level_spacing(f.pot, f.droplet, f.crit, f.log_u,
                                       f.n);
  CHECK(s.measured > 0.0);
  CHECK(expected_count(f.pot, f.log_u, f.n, f.crit.r_star, s.measured) ==
        doctest::Approx(1.0).epsilon(1e-6));
  // The profile-integrated prediction lands close; the constant-density
  // one captures the n-scaling but not the constant.
  CHECK(std::fabs(s.predicted_profile / s.measured - 1.0) < 0.05);
  CHECK(s.predicted_rho0 > 0.0);
}
