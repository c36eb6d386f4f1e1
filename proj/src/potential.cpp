#include "cg/potential.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cg/errors.hpp"
#include "cg/quadrature.hpp"
#include "cg/spline.hpp"

namespace cg {

double RadialPotential::laplacian(double r, int k) const {
  if (r <= 0.0) fail(ErrorCode::domain, "laplacian: r must be positive");
  // d^k/dr^k [ q''(r) + q'(r)/r ]; the 1/r part expands by Leibniz.
  double out = derivative(r, k + 2);
  double fact = 1.0;  // i! * binom(k, i) = k!/(k-i)!
  double rpow = r;
  for (int i = 0; i <= k; ++i) {
    const double sign = (i % 2 == 0) ? 1.0 : -1.0;
    out += sign * fact * derivative(r, k - i + 1) / rpow;
    fact *= double(k - i);
    rpow *= r;
  }
  return out;
}

PolyLogPotential::PolyLogPotential(std::vector<double> coeffs,
                                   double log_coeff)
    : coeffs_(std::move(coeffs)), log_coeff_(log_coeff) {
  if (coeffs_.empty()) coeffs_.push_back(0.0);
}

double PolyLogPotential::derivative(double r, int k) const {
  if (k < 0 || k > max_order())
    fail(ErrorCode::unsupported_order, "PolyLogPotential: derivative order");
  if (r < 0.0 || (r == 0.0 && log_coeff_ != 0.0))
    fail(ErrorCode::domain, "PolyLogPotential: r out of domain");
  double out = 0.0;
  if (log_coeff_ != 0.0) {
    if (k == 0) {
      out += log_coeff_ * std::log(r);
    } else {
      // (log r)^{(k)} = (-1)^{k-1} (k-1)! r^{-k}
      double term = log_coeff_ / r;
      for (int i = 1; i < k; ++i) term *= -double(i) / r;
      out += term;
    }
  }
  for (size_t p = coeffs_.size(); p-- > 0;) {
    if (int(p) < k) break;
    double c = coeffs_[p];
    if (c == 0.0) continue;
    for (int i = 0; i < k; ++i) c *= double(p - i);
    out += c * std::pow(r, double(int(p) - k));
  }
  return out;
}

PolyLogPotential PolyLogPotential::quadratic(double a) {
  if (a <= 0.0) fail(ErrorCode::config, "quadratic potential: a must be > 0");
  return PolyLogPotential({0.0, 0.0, 1.0 / a});
}

PolyLogPotential PolyLogPotential::cubic(double t, double c) {
  if (t <= 0.0 || c <= 0.0)
    fail(ErrorCode::config, "cubic potential: t and c must be > 0");
  // Delta Q = 3 r + c/r - 2 t; its minimum 2 sqrt(3c) - 2t vanishes exactly
  // when t = sqrt(3c), at r* = sqrt(c/3).
  return PolyLogPotential({0.0, c, -0.5 * t, 1.0 / 3.0});
}

PolyLogPotential PolyLogPotential::from_laplacian_profile(
    const std::vector<std::pair<int, double>>& w_terms, double inner_radius,
    double base_slope) {
  if (inner_radius < 0.0)
    fail(ErrorCode::invalid_profile, "profile: inner radius must be >= 0");
  if (inner_radius == 0.0 && base_slope != 0.0)
    fail(ErrorCode::invalid_profile,
         "profile: base slope must vanish when the profile starts at 0");
  // P(r) = int s w(s) ds termwise; w term c s^k contributes c r^{k+2}/(k+2).
  // Then r q'(r) = a s0 + P(r) - P(a), so
  //   q(r) = (a s0 - P(a)) log r + sum c r^{k+2}/(k+2)^2 + const.
  int max_pow = 2;
  for (const auto& [k, c] : w_terms) {
    if (k < -1) fail(ErrorCode::invalid_profile, "profile: power below -1");
    max_pow = std::max(max_pow, k + 2);
  }
  std::vector<double> coeffs(size_t(max_pow) + 1, 0.0);
  double p_at_a = 0.0;
  for (const auto& [k, c] : w_terms) {
    coeffs[size_t(k + 2)] += c / double((k + 2) * (k + 2));
    p_at_a += c * std::pow(inner_radius, double(k + 2)) / double(k + 2);
  }
  const double log_coeff = inner_radius * base_slope - p_at_a;
  if (inner_radius == 0.0 && std::fabs(log_coeff) > 1e-14)
    fail(ErrorCode::invalid_profile, "profile: log term at the origin");
  PolyLogPotential pot(coeffs, inner_radius == 0.0 ? 0.0 : log_coeff);
  const double anchor = inner_radius == 0.0 ? 0.0 : inner_radius;
  const double q_anchor = anchor == 0.0 ? pot.value(0.0) : pot.value(anchor);
  std::vector<double> shifted = pot.coeffs();
  shifted[0] -= q_anchor;
  return PolyLogPotential(shifted, pot.log_coeff());
}

CustomPotential::CustomPotential(
    std::vector<std::function<double(double)>> derivs, int fd_orders,
    double fd_scale)
    : derivs_(std::move(derivs)), fd_orders_(fd_orders), fd_scale_(fd_scale) {
  if (derivs_.empty())
    fail(ErrorCode::config, "CustomPotential: need at least q itself");
}

int CustomPotential::max_order() const {
  return int(derivs_.size()) - 1 + fd_orders_;
}

double CustomPotential::derivative(double r, int k) const {
  if (k < 0 || k > max_order())
    fail(ErrorCode::unsupported_order, "CustomPotential: derivative order");
  if (k < int(derivs_.size())) return derivs_[size_t(k)](r);
  const int base = int(derivs_.size()) - 1;
  const auto& f = derivs_[size_t(base)];
  const double h = fd_scale_ * std::max(1.0, std::fabs(r));
  return finite_difference(f, r, k - base, h);
}

class GridProfilePotential::CubicSplineHolder {
 public:
  CubicSpline w;        // Laplacian profile on the grid
  CubicSpline rw;       // s -> s w(s), for the flux integral
  CubicSpline q;        // q itself, from a dense cumulative integral
  double r_min = 0.0, r_max = 0.0;
  double flux_max = 0.0, w_end = 0.0, q_end = 0.0;
};

GridProfilePotential::GridProfilePotential(std::vector<double> r,
                                           std::vector<double> w,
                                           double inner_radius,
                                           double base_slope)
    : a_(inner_radius), s0_(base_slope) {
  if (r.size() < 4)
    fail(ErrorCode::invalid_profile, "grid profile: need >= 4 nodes");
  if (inner_radius < 0.0)
    fail(ErrorCode::invalid_profile, "grid profile: inner radius >= 0");
  for (double v : w)
    if (v < 0.0)
      fail(ErrorCode::invalid_profile, "grid profile: negative Laplacian");
  auto holder = std::make_shared<CubicSplineHolder>();
  std::vector<double> rw(r.size());
  for (size_t i = 0; i < r.size(); ++i) rw[i] = r[i] * w[i];
  holder->r_min = r.front();
  holder->r_max = r.back();
  if (inner_radius < holder->r_min - 1e-12 && inner_radius != 0.0)
    fail(ErrorCode::invalid_profile, "grid profile: inner radius off grid");
  holder->w = CubicSpline(r, w);
  holder->rw = CubicSpline(std::move(r), std::move(rw));
  holder->w_end = holder->w(holder->r_max);

  // q' = flux/r with flux(r) = a s0 + int_a^r s w(s) ds; integrate q' on a
  // dense grid for q, anchored to q(anchor) = 0.
  const double anchor = std::max(inner_radius, holder->r_min);
  const double base_int = holder->rw.integral_from_start(anchor);
  auto flux0 = [&](double x) {
    return a_ * s0_ + holder->rw.integral_from_start(x) - base_int;
  };
  const int dense = 1024;
  std::vector<double> xs(dense), qp(dense);
  const double lo = holder->r_min > 0.0 ? holder->r_min
                                        : 1e-6 * holder->r_max;
  for (int i = 0; i < dense; ++i) {
    xs[size_t(i)] = lo + (holder->r_max - lo) * double(i) / double(dense - 1);
    qp[size_t(i)] = flux0(xs[size_t(i)]) / xs[size_t(i)];
  }
  CubicSpline qps(xs, qp);
  std::vector<double> qv(dense);
  const double q_base = qps.integral_from_start(anchor);
  for (int i = 0; i < dense; ++i)
    qv[size_t(i)] = qps.integral_from_start(xs[size_t(i)]) - q_base;
  holder->q = CubicSpline(std::move(xs), std::move(qv));
  holder->flux_max = flux0(holder->r_max);
  holder->q_end = holder->q(holder->r_max);
  s_ = std::move(holder);
}

double GridProfilePotential::flux(double r) const {
  if (r <= s_->r_max) {
    const double base = s_->rw.integral_from_start(
        std::max(a_, s_->r_min));
    return a_ * s0_ + s_->rw.integral_from_start(std::max(r, s_->r_min)) -
           base;
  }
  // Frozen profile beyond the grid: w = w_end constant.
  return s_->flux_max + 0.5 * s_->w_end * (r * r - s_->r_max * s_->r_max);
}

double GridProfilePotential::w_eval(double r, int k) const {
  if (r > s_->r_max) return k == 0 ? s_->w_end : 0.0;
  if (r < s_->r_min) return k == 0 ? s_->w(s_->r_min) : 0.0;
  return s_->w.eval(r, k);
}

double GridProfilePotential::derivative(double r, int k) const {
  if (k < 0 || k > max_order())
    fail(ErrorCode::unsupported_order, "grid profile: derivative order");
  if (r <= 0.0) fail(ErrorCode::domain, "grid profile: r must be positive");
  if (k == 0) {
    if (r <= s_->r_max)
      return s_->q(std::max(r, s_->r_min));
    // q(r) = q_end + int: closed form with constant w beyond the grid.
    const double rm = s_->r_max;
    const double g0 = s_->flux_max - 0.5 * s_->w_end * rm * rm;
    return s_->q_end + g0 * std::log(r / rm) +
           0.25 * s_->w_end * (r * r - rm * rm);
  }
  if (k == 1) return flux(r) / r;
  // q'' = w - q'/r and its derivatives by Leibniz on q'/r.
  double out = w_eval(r, k - 2);
  double fact = 1.0;
  double rpow = r;
  const int kk = k - 2;
  for (int i = 0; i <= kk; ++i) {
    const double sign = (i % 2 == 0) ? 1.0 : -1.0;
    out -= sign * fact * derivative(r, kk - i + 1) / rpow;
    fact *= double(kk - i);
    rpow *= r;
  }
  return out;
}

CriticalityData detect_criticality(const RadialPotential& pot,
                                   const Droplet& droplet,
                                   const CriticalityOptions& opt) {
  double lo = std::max(opt.search_lo, droplet.r0 > 0.0 ? droplet.r0 : 0.0);
  if (lo <= 0.0) lo = opt.search_lo;
  double hi = opt.search_hi > 0.0 ? opt.search_hi : droplet.r1;
  if (hi <= lo) fail(ErrorCode::config, "detect_criticality: bad interval");

  auto dq = [&](double r) { return pot.laplacian(r, 0); };

  // Coarse scan for the global minimum, then Brent refinement.
  const int n_scan = 800;
  double best_r = lo, best_v = dq(lo);
  for (int i = 1; i <= n_scan; ++i) {
    const double r = lo + (hi - lo) * double(i) / double(n_scan);
    const double v = dq(r);
    if (v < best_v) {
      best_v = v;
      best_r = r;
    }
  }
  const double step = (hi - lo) / double(n_scan);
  double a = std::max(lo, best_r - 2.0 * step);
  double b = std::min(hi, best_r + 2.0 * step);
  double r_star = brent_min(dq, a, b, 1e-14);

  // Polish with a root solve on the derivative when it brackets a sign
  // change (exact for simple minima, harmless otherwise).
  auto ddq = [&](double r) { return pot.laplacian(r, 1); };
  const double h = std::max(1e-9, 1e-6 * r_star);
  if (ddq(r_star - h) < 0.0 && ddq(r_star + h) > 0.0)
    r_star = brent_root(ddq, r_star - h, r_star + h, 1e-16);

  const double min_val = dq(r_star);
  if (std::fabs(min_val) > opt.zero_tol) {
    std::ostringstream os;
    os << "detect_criticality: min Delta Q = " << min_val << " at r = "
       << r_star;
    fail(ErrorCode::not_critical, os.str());
  }

  // Classify the order of the zero from the radial derivatives of Delta Q,
  // probing only as deep as the potential can differentiate.
  const int max_m =
      std::max(1, std::min(opt.max_m, (pot.max_order() - 2) / 2));
  // Compare derivatives on a common scale: d_k r*^k / k! are all of the
  // same dimension, so the max over k is a fair yardstick (raw derivatives
  // grow factorially with k and would drown the low orders).
  std::vector<double> d(size_t(2 * max_m) + 1, 0.0);
  auto classify = [&](double r) {
    std::vector<double> unit(size_t(2 * max_m) + 1, 0.0);
    double scale = 0.0, fact = 1.0;
    for (int k = 1; k <= 2 * max_m; ++k) {
      fact *= double(k);
      d[size_t(k)] = pot.laplacian(r, k);
      unit[size_t(k)] = std::fabs(d[size_t(k)]) * std::pow(r, k) / fact;
      scale = std::max(scale, unit[size_t(k)]);
    }
    if (scale <= 0.0)
      fail(ErrorCode::inconsistent_criticality,
           "detect_criticality: all probed derivatives vanish");
    for (int k = 1; k <= 2 * max_m; ++k)
      if (unit[size_t(k)] > opt.classify_tol * scale) return k;
    return 0;
  };
  int first = classify(r_star);
  // A smooth vanishing minimum cannot have an odd first derivative; seeing
  // one means r_star is slightly off a flat zero of order 2m >= 4, where
  // minimizing |Delta Q| locates the ring only to O(|Delta Q|^{1/2m}). The
  // offending odd derivative has a simple zero at the true ring, so root it.
  for (int pass = 0; pass < 3 && first > 0 && first % 2 != 0; ++pass) {
    const int k_odd = first;
    auto dk = [&](double r) { return pot.laplacian(r, k_odd); };
    const double w = std::max(1e-6, 1e-2 * r_star);
    if (dk(r_star - w) * dk(r_star + w) >= 0.0) break;
    r_star = brent_root(dk, r_star - w, r_star + w, 1e-15);
    first = classify(r_star);
  }
  if (first == 0)
    fail(ErrorCode::inconsistent_criticality,
         "detect_criticality: all probed derivatives vanish");
  if (first % 2 != 0)
    fail(ErrorCode::inconsistent_criticality,
         "detect_criticality: first non-vanishing derivative has odd order");
  const double gamma = d[size_t(first)];
  if (gamma <= 0.0)
    fail(ErrorCode::inconsistent_criticality,
         "detect_criticality: minimum with non-positive even derivative");

  CriticalityData out;
  out.r_star = r_star;
  out.m = first / 2;
  out.gamma = gamma;
  out.kappa = 0.5 * r_star * std::pow(gamma, 1.0 / double(2 * out.m + 2));
  out.tau_star = 0.5 * (r_star * pot.derivative(r_star, 1) -
                        (droplet.r0 > 0.0
                             ? droplet.r0 * pot.derivative(droplet.r0, 1)
                             : 0.0));
  return out;
}

AdmissibilityReport validate_admissibility(const RadialPotential& pot,
                                           const Droplet& droplet,
                                           const AdmissibilityOptions& opt) {
  AdmissibilityReport rep;
  const double r1 = droplet.r1;
  const double r_max = opt.r_max > 0.0 ? opt.r_max : 50.0 * std::max(r1, 1.0);

  // Growth: q(r) must dominate 2 log r at infinity so the gas is confined.
  for (double r = 4.0 * std::max(r1, 1.0); r <= r_max; r *= 1.5) {
    if (pot.value(r) < (2.0 + opt.growth_margin) * std::log(r)) {
      rep.growth_ok = false;
      rep.violation_r = r;
      rep.detail = "q(r) fails to dominate 2 log r";
      break;
    }
  }

  // Subharmonicity on the droplet: Delta Q >= 0 (a vanishing minimum is
  // allowed, negative values are not).
  const double lo = droplet.r0 > 0.0 ? droplet.r0 : 1e-6 * r1;
  int minima = 0;
  double prev = pot.laplacian(lo, 0);
  double prev2 = prev;
  for (int i = 1; i <= opt.grid_points; ++i) {
    const double r = lo + (r1 - lo) * double(i) / double(opt.grid_points);
    const double v = pot.laplacian(r, 0);
    if (v < -opt.laplacian_tol && rep.laplacian_ok) {
      rep.laplacian_ok = false;
      rep.violation_r = r;
      rep.detail = "Delta Q negative inside the droplet";
    }
    // Count local minima that touch zero.
    if (i >= 2 && prev < prev2 && prev < v &&
        std::fabs(prev) <= std::sqrt(opt.laplacian_tol))
      ++minima;
    prev2 = prev;
    prev = v;
  }
  if (minima > 1) {
    rep.single_critical_ring = false;
    rep.detail = "more than one vanishing minimum of Delta Q";
  }
  rep.admissible = rep.growth_ok && rep.laplacian_ok && rep.single_critical_ring;
  return rep;
}

}  // namespace cg
