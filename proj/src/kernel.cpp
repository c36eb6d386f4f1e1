#include "cg/kernel.hpp"

#include <algorithm>
#include <cmath>

#include "cg/errors.hpp"
#include "cg/quadrature.hpp"
#include "cg/spline.hpp"
#include "cg/universal.hpp"

namespace cg {

namespace {

KernelValue kernel_sum(const RadialPotential& pot,
                       const std::vector<double>& log_u, long n,
                       std::complex<double> z1, std::complex<double> z2,
                       long j_lo, long j_hi) {
  if (long(log_u.size()) < n)
    fail(ErrorCode::config, "kernel: norm table shorter than n");
  if (j_lo < 0 || j_hi >= n || j_lo > j_hi)
    fail(ErrorCode::config, "kernel: bad index range");
  const double a1 = std::abs(z1), a2 = std::abs(z2);
  const double base = -0.5 * double(n) * (pot.value(a1) + pot.value(a2));
  const double phase_step = std::arg(z1) - std::arg(z2);
  const bool zero = (a1 == 0.0 || a2 == 0.0);
  const double log_r2 = zero ? 0.0 : std::log(a1) + std::log(a2);

  // Log-magnitudes of the terms, then one global max shift.
  std::vector<double> lmag;
  std::vector<long> idx;
  lmag.reserve(size_t(j_hi - j_lo + 1));
  double lmax = -1e308;
  for (long j = j_lo; j <= j_hi; ++j) {
    if (zero && j > 0) break;  // z^j = 0 kills every higher term
    const double l = double(j) * log_r2 + base - std::log(2.0) -
                     log_u[size_t(j)];
    lmag.push_back(l);
    idx.push_back(j);
    lmax = std::max(lmax, l);
  }
  double re = 0.0, im = 0.0;
  for (size_t t = 0; t < lmag.size(); ++t) {
    const double w = std::exp(lmag[t] - lmax);
    const double ph = double(idx[t]) * phase_step;
    re += w * std::cos(ph);
    im += w * std::sin(ph);
  }
  KernelValue out;
  out.n = n;
  out.z1 = z1;
  out.z2 = z2;
  const double mod_shifted = std::hypot(re, im);
  out.modulus = mod_shifted > 0.0 ? std::exp(lmax + std::log(mod_shifted))
                                  : 0.0;
  out.phase = std::atan2(im, re);
  return out;
}

}  // namespace

KernelValue kernel_full(const RadialPotential& pot,
                        const std::vector<double>& log_u, long n,
                        std::complex<double> z1, std::complex<double> z2) {
  return kernel_sum(pot, log_u, n, z1, z2, 0, n - 1);
}

KernelValue kernel_windowed(const RadialPotential& pot,
                            const Droplet& droplet,
                            const CriticalityData& crit,
                            const std::vector<double>& log_u, long n,
                            std::complex<double> z1, std::complex<double> z2,
                            double margin) {
  WindowBounds w = window_bounds(pot, droplet, crit, n, margin);
  KernelValue out = kernel_sum(pot, log_u, n, z1, z2, w.j_lo, w.j_hi);
  out.truncated = true;
  out.window = w;
  return out;
}

double double_scaling_error(const RadialPotential& pot, const Droplet& droplet,
                            const CriticalityData& crit,
                            const std::vector<double>& log_u, long n,
                            std::complex<double> xi1, std::complex<double> xi2,
                            double margin, double* kn_scaled,
                            double* kstar_scaled) {
  const int m = crit.m;
  const double scale =
      std::pow(crit.gamma * double(n), -1.0 / double(2 * m + 2));
  const std::complex<double> z1 = crit.r_star + xi1 * scale;
  const std::complex<double> z2 = crit.r_star + xi2 * scale;
  KernelValue kn = margin > 0.0
                       ? kernel_windowed(pot, droplet, crit, log_u, n, z1, z2,
                                         margin)
                       : kernel_full(pot, log_u, n, z1, z2);
  const double lhs = kn.modulus *
                     std::pow(crit.gamma * double(n), -1.0 / double(m + 1));
  const double rhs = 0.25 * std::abs(k_star(m, xi1, xi2));
  if (kn_scaled) *kn_scaled = lhs;
  if (kstar_scaled) *kstar_scaled = rhs;
  return std::fabs(lhs - rhs);
}

double expected_count(const RadialPotential& pot,
                      const std::vector<double>& log_u, long n, double center,
                      double radius, double rel_tol) {
  if (radius < 0.0) fail(ErrorCode::domain, "expected_count: radius < 0");
  if (radius == 0.0) return 0.0;
  if (center < 0.0) fail(ErrorCode::domain, "expected_count: center < 0");
  // Diagonal kernel depends only on |z|; the polar integral about the
  // center is valid whether or not the disk covers the origin.
  auto diag = [&](double r) {
    return kernel_full(pot, log_u, n, r, r).modulus;
  };
  auto ring = [&](double t) {
    // angular average of K(|center + t e^{i a}|) over a in [0, 2pi)
    QuadResult ang = integrate_gk(
        [&](double a) {
          const double r = std::sqrt(center * center + t * t +
                                     2.0 * center * t * std::cos(a));
          return diag(r);
        },
        0.0, M_PI, std::max(rel_tol, 1e-10));
    return 2.0 * ang.value * t;
  };
  QuadResult q = integrate_gk(ring, 0.0, radius, rel_tol);
  return q.value / M_PI;
}

SpacingResult mean_level_spacing(const RadialPotential& pot,
                                 const Droplet& droplet,
                                 const CriticalityData& crit,
                                 const std::vector<double>& log_u, long n) {
  const int m = crit.m;
  const double unit =
      std::pow(crit.gamma * double(n), -1.0 / double(2 * m + 2));
  SpacingResult out;

  // Measured: radius around r* holding exactly one particle on average.
  // The diagonal kernel is cached on a spline; every count() probe below
  // reads the cache instead of resumming n terms.
  double reach = 8.0 * unit;
  auto build_cache = [&](double span) {
    const int pts = 641;
    std::vector<double> xs(pts), ys(pts);
    const double lo = std::max(crit.r_star - span, 1e-6 * crit.r_star);
    const double hi_r = crit.r_star + span;
    for (int i = 0; i < pts; ++i) {
      xs[size_t(i)] = lo + (hi_r - lo) * double(i) / double(pts - 1);
      ys[size_t(i)] =
          kernel_full(pot, log_u, n, xs[size_t(i)], xs[size_t(i)]).modulus;
    }
    return CubicSpline(std::move(xs), std::move(ys));
  };
  CubicSpline diag = build_cache(reach);
  auto count = [&](double s) {
    if (s <= 0.0) return 0.0;
    QuadResult q = integrate_gk(
        [&](double t) {
          QuadResult ang = integrate_gk(
              [&](double a) {
                const double r =
                    std::sqrt(crit.r_star * crit.r_star + t * t +
                              2.0 * crit.r_star * t * std::cos(a));
                return diag(r);
              },
              0.0, M_PI, 1e-9);
          return 2.0 * ang.value * t;
        },
        0.0, s, 1e-9);
    return q.value / M_PI;
  };
  double hi = 2.0 * unit;
  int guard = 0;
  while (count(hi) < 1.0) {
    hi *= 1.5;
    if (hi > 0.9 * reach) {
      reach = 2.0 * hi;
      diag = build_cache(reach);
    }
    if (++guard > 60)
      fail(ErrorCode::numeric, "mean_level_spacing: bracket failure");
  }
  out.measured =
      brent_root([&](double s) { return count(s) - 1.0; }, 0.0, hi, 1e-10);

  const double rho0 = rho_star(m, 0.0);
  out.predicted_rho0 = 2.0 / std::sqrt(M_PI * rho0) * unit;

  // Self-consistent prediction: integrate the limiting density
  // (1/(4 pi)) rho(Re xi) over |xi| < sigma and solve for count 1.
  auto limit_count = [&](double sigma) {
    QuadResult q = integrate_gk(
        [&](double t) {
          QuadResult ang = integrate_gk(
              [&](double a) { return rho_star(m, t * std::cos(a)); }, 0.0,
              M_PI, 1e-8);
          return 2.0 * ang.value * t;
        },
        0.0, sigma, 1e-8);
    return q.value / (4.0 * M_PI);
  };
  double sig_hi = 2.0;
  guard = 0;
  while (limit_count(sig_hi) < 1.0) {
    sig_hi *= 1.5;
    if (++guard > 30)
      fail(ErrorCode::numeric, "mean_level_spacing: profile bracket");
  }
  out.predicted_profile =
      brent_root([&](double s) { return limit_count(s) - 1.0; }, 0.0, sig_hi,
                 1e-9) *
      unit;
  return out;
}

}  // namespace cg
