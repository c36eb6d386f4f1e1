#include "cg/universal.hpp"

#include <array>
#include <cmath>
#include <map>
#include <mutex>

#include "cg/errors.hpp"
#include "cg/quadrature.hpp"
#include "cg/spline.hpp"

namespace cg {

namespace {

constexpr int kMaxM = 4;
constexpr double kExpCut = 70.0;  // exp(-70) ~ 4e-31, below any tolerance

double factorial(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= double(i);
  return f;
}

void check_m(int m) {
  if (m < 1 || m > kMaxM)
    fail(ErrorCode::config, "universal: m must be in [1, 4]");
}

// Outward/inward search for the radius where theta * P_m = kExpCut.
double pearcey_bound(int m, double theta, double dir) {
  double y = dir;
  auto g = [&](double t) { return theta * p_poly(m, t) - kExpCut; };
  if (g(y) < 0.0) {
    int guard = 0;
    while (g(y) < 0.0) {
      y *= 2.0;
      if (++guard > 200) fail(ErrorCode::numeric, "pearcey: bound search");
    }
    return brent_root(g, 0.5 * y, y, std::fabs(y) * 1e-12);
  }
  int guard = 0;
  while (g(0.5 * y) >= 0.0) {
    y *= 0.5;
    if (++guard > 2000) fail(ErrorCode::numeric, "pearcey: bound search");
  }
  return brent_root(g, 0.5 * y, y, std::fabs(y) * 1e-12);
}

// log P_m(theta) on a log-theta grid; P_m is expensive enough that kernel
// quadratures want a cached profile. Safe for concurrent use after build.
const CubicSpline& log_pearcey_spline(int m) {
  static std::mutex mu;
  static std::map<int, CubicSpline> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  const double t_lo = -70.0, t_hi = 70.0, step = 0.05;
  std::vector<double> ts, us;
  for (double t = t_lo; t <= t_hi + 1e-9; t += step) {
    ts.push_back(t);
    us.push_back(std::log(pearcey(m, std::exp(t))));
  }
  return cache.emplace(m, CubicSpline(std::move(ts), std::move(us))).first
      ->second;
}

double log_pearcey_cached(int m, double theta) {
  const double t = std::log(theta);
  const CubicSpline& s = log_pearcey_spline(m);
  if (t >= s.x_min() && t <= s.x_max()) return s(t);
  if (t > s.x_max())  // Gaussian regime: P ~ sqrt(2 pi (2m)!/theta)
    return 0.5 * std::log(2.0 * M_PI * factorial(2 * m)) - 0.5 * t;
  // flat-well regime: P ~ 2 Gamma(1+1/(2m+2)) ((2m+2)!/theta)^{1/(2m+2)}
  const double p = 1.0 / double(2 * m + 2);
  return std::log(2.0 * std::tgamma(1.0 + p)) +
         p * (std::log(factorial(2 * m + 2)) - t);
}

}  // namespace

double p_poly(int m, double y) {
  check_m(m);
  // Horner over k = 2..2m+2 with coefficients 1/((2m+2-k)! k!).
  double out = 0.0;
  for (int k = 2 * m + 2; k >= 2; --k)
    out = out * y + 1.0 / (factorial(2 * m + 2 - k) * factorial(k));
  return out * y * y;
}

double homogeneous_exponent(int m, double y, double x) {
  check_m(m);
  const int d = 2 * m + 2;
  const double xp = std::pow(x, double(d - 1));
  return (std::pow(y, double(d)) - double(d) * y * xp +
          double(d - 1) * xp * x) /
         factorial(d);
}

double pearcey(int m, double theta) {
  check_m(m);
  if (!(theta > 0.0)) fail(ErrorCode::domain, "pearcey: theta must be > 0");
  const double lo = pearcey_bound(m, theta, -1.0);
  const double hi = pearcey_bound(m, theta, 1.0);
  auto f = [&](double y) {
    const double e = theta * p_poly(m, y);
    return e > kExpCut ? 0.0 : std::exp(-e);
  };
  QuadResult q = integrate_gk_split(f, lo, hi, {0.0}, 1e-12);
  if (!q.converged) fail(ErrorCode::numeric, "pearcey: quadrature stalled");
  return q.value;
}

double f1(double gamma, double x) {
  if (!(gamma > 0.0)) fail(ErrorCode::domain, "f1: gamma must be > 0");
  if (x == 0.0)
    return 2.0 * std::tgamma(1.25) * std::pow(24.0 / gamma, 0.25);
  // Bridge identity: substituting u = x w in the defining integral gives
  // f1(x) = |x| pearcey(1, gamma x^4); the x -> 0 limit below is the
  // quartic-Gaussian value this degenerates to.
  const double ax = std::fabs(x);
  return ax * pearcey(1, gamma * ax * ax * ax * ax);
}

double h1(double gamma, double x) {
  return std::sqrt(gamma / (4.0 * M_PI)) * std::fabs(x) * f1(gamma, x);
}

double universal_constant(int m, double rel_tol, double cutoff) {
  check_m(m);
  const double norm = std::sqrt(2.0 * M_PI * factorial(2 * m));
  auto integrand = [&](double x) {
    if (x <= 1e-30) return 0.0;  // integrand ~ x^{2m} log x, negligible
    const double theta = std::pow(x, double(2 * m + 2));
    const double lp = log_pearcey_cached(m, theta);
    return std::pow(x, double(2 * m)) *
           (double(2 * m) * std::log(x) + lp - std::log(norm));
  };
  const double cut = cutoff;
  QuadResult head = integrate_tanh_sinh(integrand, 0.0, 1.0, rel_tol, 14);
  QuadResult body = integrate_gk(integrand, 1.0, cut, rel_tol);
  // The integrand goes through a spline cache, so its noise floor is well
  // above machine precision; judge convergence by the absolute error bound
  // rather than the converged flags.
  const double err = head.error + body.error;
  if (err > 1e-6 * (1.0 + std::fabs(head.value + body.value)))
    fail(ErrorCode::numeric, "universal_constant: quadrature stalled");
  // Tail model: integrand ~ c/x^2 (exact decay rate for m = 1), so
  // int_X^inf ~ integrand(X) * X.
  const double tail = integrand(cut) * cut;
  return 2.0 * (head.value + body.value + tail);
}

std::complex<double> k_star(int m, std::complex<double> xi1,
                            std::complex<double> xi2) {
  check_m(m);
  const double re1 = xi1.real(), re2 = xi2.real();
  const double omega =
      (xi1.imag() - xi2.imag()) / (2.0 * factorial(2 * m + 1));
  auto envelope = [&](double x) {
    const double e = 0.5 * (homogeneous_exponent(m, re1, x) +
                            homogeneous_exponent(m, re2, x));
    if (e > kExpCut) return 0.0;
    const double theta = std::pow(std::fabs(x), double(2 * m + 2));
    const double lp = theta > 0.0 ? log_pearcey_cached(m, theta)
                                  : 0.0;  // x = 0: integrand vanishes anyway
    const double v = -e - lp + double(2 * m - 1) * std::log(std::fabs(x));
    return v < -700.0 ? 0.0 : std::exp(v);
  };
  // Support cutoff: envelope dies once the homogeneous exponent passes the
  // cut; search outward from the largest input scale.
  auto find_cut = [&](double dir) {
    double x = dir * std::max({std::fabs(re1), std::fabs(re2), 1.0});
    int guard = 0;
    while (0.5 * (homogeneous_exponent(m, re1, x) +
                  homogeneous_exponent(m, re2, x)) < kExpCut + 10.0) {
      x *= 1.5;
      if (++guard > 200) fail(ErrorCode::numeric, "k_star: cutoff search");
    }
    return x;
  };
  const double x_lo = find_cut(-1.0), x_hi = find_cut(1.0);
  auto re_part = [&](double x) {
    const double env = envelope(x);
    return env == 0.0
               ? 0.0
               : env * std::cos(omega * std::pow(x, double(2 * m + 1)));
  };
  auto im_part = [&](double x) {
    const double env = envelope(x);
    return env == 0.0
               ? 0.0
               : env * std::sin(omega * std::pow(x, double(2 * m + 1)));
  };
  QuadResult qr = integrate_gk_split(re_part, x_lo, x_hi, {0.0}, 1e-9, 1e-14);
  const double pref = 1.0 / factorial(2 * m);
  if (omega == 0.0) return {pref * qr.value, 0.0};
  QuadResult qi = integrate_gk_split(im_part, x_lo, x_hi, {0.0}, 1e-9, 1e-14);
  return {pref * qr.value, pref * qi.value};
}

double rho_star(int m, std::complex<double> xi) {
  return k_star(m, std::complex<double>(xi.real(), 0.0),
                std::complex<double>(xi.real(), 0.0))
      .real();
}

}  // namespace cg
