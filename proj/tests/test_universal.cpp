#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <complex>

#include "doctest.h"

#include "cg/quadrature.hpp"
#include "cg/universal.hpp"

using namespace cg;

namespace {
const double kGamma = 6.0 * std::sqrt(3.0);  // cubic fixture criticality
}

TEST_CASE("limit polynomial values and positivity") {
  // m = 1: P(y) = y^2/4 + y^3/6 + y^4/24.
  CHECK(p_poly(1, 1.0) == doctest::Approx(11.0 / 24.0).epsilon(1e-15));
  CHECK(p_poly(1, 0.0) == doctest::Approx(0.0));
  for (double y = -6.0; y <= 6.0; y += 0.25) {
    CHECK(p_poly(1, y) >= 0.0);
    CHECK(p_poly(2, y) >= 0.0);
  }
}

TEST_CASE("homogeneous form agrees with the scaled polynomial") {
  for (int m : {1, 2}) {
    for (double x : {0.5, -0.7, 2.0}) {
      for (double y : {-1.0, 0.3, 1.7}) {
        const double lhs = homogeneous_exponent(m, y, x);
        const double rhs =
            std::pow(x, double(2 * m + 2)) * p_poly(m, y / x - 1.0);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
      }
    }
  }
}

TEST_CASE("pearcey integral reference value and asymptotics") {
  CHECK(pearcey(1, 100.0) == doctest::Approx(0.3588266).epsilon(1e-6));
  // The relative deviation from the two-term asymptotic is c2/theta^2 with
  // c2 = 385/72 ~ 5.35 (third-order Laplace expansion), approached from
  // above as theta grows.
  double prev = 1e9;
  for (double theta : {50.0, 100.0, 400.0, 2000.0}) {
    const double asym =
        std::sqrt(4.0 * M_PI / theta) * (1.0 + 7.0 / (6.0 * theta));
    const double scaled =
        std::fabs(pearcey(1, theta) / asym - 1.0) * theta * theta;
    CHECK(scaled > 385.0 / 72.0);
    CHECK(scaled < prev);
    prev = scaled;
  }
  CHECK(prev == doctest::Approx(385.0 / 72.0).epsilon(2e-3));
}

TEST_CASE("f1 matches direct quadrature of its defining integral") {
  for (double x : {0.0, 0.4, -0.9, 1.6}) {
    QuadResult direct = integrate_gk(
        [&](double y) {
          return std::exp(-kGamma * (x * x * y * y / 4.0 +
                                     x * y * y * y / 6.0 +
                                     y * y * y * y / 24.0));
        },
        -30.0, 30.0, 1e-12);
    CHECK(f1(kGamma, x) == doctest::Approx(direct.value).epsilon(1e-9));
  }
  CHECK(f1(kGamma, 0.0) ==
        doctest::Approx(2.0 * std::tgamma(1.25) *
                        std::pow(24.0 / kGamma, 0.25)).epsilon(1e-12));
  CHECK(h1(kGamma, 0.5) ==
        doctest::Approx(std::sqrt(kGamma / (4.0 * M_PI)) * 0.5 *
                        f1(kGamma, 0.5)).epsilon(1e-13));
}

TEST_CASE("universal constant for simple ring criticality") {
  CHECK(universal_constant(1) == doctest::Approx(1.6035645156).epsilon(2e-6));
}

TEST_CASE("limit kernel diagonal and symmetries") {
  CHECK(rho_star(1, 0.0) == doctest::Approx(0.5274381914).epsilon(1e-8));
  // Evenness and dependence on the real part only.
  for (double re : {0.5, 1.0, 2.5}) {
    CHECK(rho_star(1, re) == doctest::Approx(rho_star(1, -re)).epsilon(1e-10));
    CHECK(rho_star(1, {re, 3.7}) ==
          doctest::Approx(rho_star(1, re)).epsilon(1e-10));
  }
  // Hermitian symmetry: K(a, b) = conj(K(b, a)).
  const std::complex<double> a{0.7, 0.4}, b{-0.3, 1.1};
  const auto kab = k_star(1, a, b);
  const auto kba = k_star(1, b, a);
  CHECK(kab.real() == doctest::Approx(kba.real()).epsilon(1e-9));
  CHECK(kab.imag() == doctest::Approx(-kba.imag()).epsilon(1e-9));
  // Reflection through the ring: |K(conj(xi), 0)| = |K(-xi, 0)|, with the
  // exact pointwise relation K(-xi, 0) = conj(K(conj(xi), 0)) (substitute
  // x -> -x in the defining integral).
  const std::complex<double> xi{1.2, -0.8};
  const auto k1 = k_star(1, std::conj(xi), 0.0);
  const auto k2 = k_star(1, -xi, 0.0);
  CHECK(std::abs(k1) == doctest::Approx(std::abs(k2)).epsilon(1e-10));
  CHECK(std::abs(k2 - std::conj(k1)) < 1e-10);
}

TEST_CASE("higher-order limit density grows like the Laplacian profile") {
  // rho^(m)(xi) ~ xi^{2m}/(2m)! far from the ring.
  const double r3 = rho_star(2, 3.0) / (std::pow(3.0, 4.0) / 24.0);
  const double r6 = rho_star(2, 6.0) / (std::pow(6.0, 4.0) / 24.0);
  CHECK(std::fabs(r6 - 1.0) < std::fabs(r3 - 1.0));
  CHECK(std::fabs(r6 - 1.0) < 0.2);
}
