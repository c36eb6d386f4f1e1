#include "cg/norms.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <thread>

#include "cg/errors.hpp"
#include "cg/quadrature.hpp"
#include "cg/universal.hpp"

namespace cg {

namespace {

double v_tau(const RadialPotential& pot, double tau, double r) {
  return pot.value(r) - 2.0 * tau * std::log(r);
}

double v_tau_d2(const RadialPotential& pot, double tau, double r) {
  return pot.derivative(r, 2) + 2.0 * tau / (r * r);
}

// Saddle radius for tau = j/n; extends past the droplet edge for
// diagnostic j >= n.
double saddle_radius(const RadialPotential& pot, const Droplet& droplet,
                     double tau) {
  if (tau <= 1.0) return r_of_tau(pot, droplet, tau);
  double hi = droplet.r1;
  int guard = 0;
  while (hi * pot.derivative(hi, 1) < 2.0 * tau) {
    hi *= 2.0;
    if (++guard > 60) fail(ErrorCode::numeric, "saddle_radius: no bracket");
  }
  return brent_root(
      [&](double r) { return r * pot.derivative(r, 1) - 2.0 * tau; },
      droplet.r1, hi, 1e-15);
}

bool origin_applicable(const RadialPotential& pot, const Droplet& droplet) {
  if (!droplet.disk) return false;
  double d1 = 0.0, d2 = 0.0;
  try {
    d1 = pot.derivative(0.0, 1);
    d2 = pot.derivative(0.0, 2);
  } catch (const Error&) {
    return false;
  }
  return std::fabs(d1) <= 1e-12 && d2 > 1e-12;
}

double log_factorial(long j) { return std::lgamma(double(j) + 1.0); }

}  // namespace

const char* regime_name(Regime r) {
  switch (r) {
    case Regime::exact:
      return "exact";
    case Regime::bulk:
      return "bulk";
    case Regime::critical:
      return "critical";
    default:
      return "origin";
  }
}

NormEntry log_norm_exact(const RadialPotential& pot, const Droplet& droplet,
                         const CriticalityData* crit, long j, long n,
                         const QuadratureSpec& spec) {
  if (n < 1 || j < 0) fail(ErrorCode::config, "log_norm_exact: bad j or n");
  if (spec.rel_tol <= 0.0 || spec.rel_tol > 1e-6)
    fail(ErrorCode::config, "log_norm_exact: rel_tol out of range");
  const double tau = double(j) / double(n);
  const double r_tau = saddle_radius(pot, droplet, tau);
  // The integrand r^{2j+1} e^{-n q} peaks where r q'(r) = (2j+1)/n, not at
  // the saddle of V_tau; the distinction matters at j = 0, where r_tau can
  // sit on the origin while the actual peak is near 1/(n q'(0)).
  const double peak =
      saddle_radius(pot, droplet, (2.0 * double(j) + 1.0) / (2.0 * double(n)));

  NormEntry e;
  e.j = j;
  e.n = n;
  e.r_tau = r_tau;
  const int m = crit ? crit->m : 1;
  e.x = crit ? std::pow(double(n), 1.0 / double(2 * m + 2)) *
                   (r_tau - crit->r_star)
             : 0.0;
  e.regime = Regime::exact;

  // Shift by the peak value so the integrand is O(1) at its maximum.
  const double v0 =
      peak > 0.0 ? v_tau(pot, tau, peak) : pot.value(0.0);
  auto g = [&](double r) {
    if (r <= 0.0) return 0.0;
    const double ex = -double(n) * (v_tau(pot, tau, r) - v0) + std::log(r);
    return ex < -745.0 ? 0.0 : std::exp(ex);
  };
  const double log_peak = peak > 0.0 ? std::log(peak) : 0.0;
  const double drop = -std::log(spec.abs_floor);  // ~41 for 1e-18
  auto phi = [&](double r) {
    return -double(n) * (v_tau(pot, tau, r) - v0) + std::log(r) - log_peak +
           drop;
  };

  // Initial halfwidth: beta_n = log n / c_n with the interpolating scale
  // c_n = sqrt(n V''(r_tau)) + n^{1/(2m+2)}, then extend until the
  // integrand is negligible relative to the peak.
  double c_n = std::pow(double(n), 1.0 / double(2 * m + 2));
  if (peak > 0.0) {
    const double v2 = v_tau_d2(pot, tau, peak);
    if (v2 > 0.0) c_n += std::sqrt(double(n) * v2);
  }
  const double h0 = spec.window_multiple * std::log(double(n) + 1.0) / c_n;

  double hi = peak + h0;
  int guard = 0;
  while (phi(hi) > 0.0) {
    hi = peak + (hi - peak) * 2.0;
    if (++guard > 200) fail(ErrorCode::numeric, "log_norm_exact: window");
  }
  // Tighten to the drop radius; integrating far into the underflow tail
  // only feeds round-off noise to the adaptive rule.
  if (phi(hi) < 0.0) hi = brent_root(phi, peak, hi, 1e-9 * (hi - peak));

  double lo = 0.0;
  if (peak > 0.0) {
    lo = std::max(peak - h0, 0.25 * peak);
    guard = 0;
    while (phi(lo) > 0.0) {
      lo *= 0.5;
      if (++guard > 2000) {
        lo = 0.0;
        break;
      }
    }
    if (lo > 0.0 && phi(lo) < 0.0)
      lo = brent_root(phi, lo, peak, 1e-9 * peak);
  }

  // The exponent -n(V - v0) is computed to ~n * eps relative accuracy, so
  // demanding less than that just burns the evaluation budget at the
  // integrand's round-off floor.
  const double tol = std::max(spec.rel_tol, double(n) * 1e-15);
  QuadResult q = integrate_gk_split(g, lo, hi, {peak}, tol, 1e-300,
                                    spec.max_subdivisions);
  // The converged flag can be pessimistic when the evaluation budget runs
  // out on noise-floor tail intervals; what matters is the achieved error.
  const double accept = std::max(1e3 * tol, 1e-10);
  if (q.value <= 0.0 || !(q.error <= accept * q.value))
    fail(ErrorCode::numeric, "log_norm_exact: quadrature stalled");
  e.log_u = -double(n) * v0 + std::log(q.value);
  e.err_est = q.error / q.value;
  return e;
}

NormEntry log_norm_bulk_asym(const RadialPotential& pot,
                             const Droplet& droplet,
                             const CriticalityData* crit, long j, long n) {
  const double tau = double(j) / double(n);
  const double r_tau = saddle_radius(pot, droplet, tau);
  if (r_tau <= 0.0)
    fail(ErrorCode::regime_inapplicable, "bulk asym: saddle at the origin");
  const double v2 = v_tau_d2(pot, tau, r_tau);
  if (v2 <= 0.0)
    fail(ErrorCode::regime_inapplicable, "bulk asym: V'' <= 0 at saddle");
  NormEntry e;
  e.j = j;
  e.n = n;
  e.r_tau = r_tau;
  const int m = crit ? crit->m : 1;
  e.x = crit ? std::pow(double(n), 1.0 / double(2 * m + 2)) *
                   (r_tau - crit->r_star)
             : 0.0;
  e.regime = Regime::bulk;
  e.log_u = -double(n) * v_tau(pot, tau, r_tau) +
            0.5 * std::log(2.0 * M_PI / (double(n) * v2)) + std::log(r_tau);
  e.err_est = 2.0 / double(n);
  return e;
}

NormEntry log_norm_critical_asym(const RadialPotential& pot,
                                 const Droplet& droplet,
                                 const CriticalityData& crit, long j, long n) {
  if (crit.m != 1)
    fail(ErrorCode::unsupported_order,
         "critical asym: only m = 1 is available");
  const double tau = double(j) / double(n);
  const double r_tau = saddle_radius(pot, droplet, tau);
  NormEntry e;
  e.j = j;
  e.n = n;
  e.r_tau = r_tau;
  e.x = std::pow(double(n), 0.25) * (r_tau - crit.r_star);
  e.regime = Regime::critical;
  e.log_u = -double(n) * v_tau(pot, tau, r_tau) + std::log(r_tau) -
            0.25 * std::log(double(n)) + std::log(f1(crit.gamma, e.x));
  e.err_est = std::pow(double(n), -0.25);
  return e;
}

NormEntry log_norm_origin_asym(const RadialPotential& pot,
                               const Droplet& droplet, long j, long n) {
  if (!origin_applicable(pot, droplet))
    fail(ErrorCode::regime_inapplicable,
         "origin asym: needs a disk with q'(0) = 0 and q''(0) > 0");
  NormEntry e;
  e.j = j;
  e.n = n;
  e.r_tau = saddle_radius(pot, droplet, double(j) / double(n));
  e.x = 0.0;
  e.regime = Regime::origin;
  const double q2 = pot.derivative(0.0, 2);
  // log(2 u_j) = -n q(0) - (j+1) log(n q''(0)/2) + log j!
  e.log_u = -double(n) * pot.value(0.0) -
            double(j + 1) * std::log(double(n) * q2 / 2.0) +
            log_factorial(j) - std::log(2.0);
  e.err_est = std::pow(double(j) + 1.0, 1.5) / std::sqrt(double(n));
  return e;
}

Regime classify_regime(const RadialPotential& pot, const Droplet& droplet,
                       const CriticalityData* crit, long j, long n,
                       double window_margin) {
  if (origin_applicable(pot, droplet) &&
      double(j) <= std::pow(double(n), 0.19))
    return Regime::origin;
  if (crit) {
    try {
      WindowBounds w = window_bounds(pot, droplet, *crit, n, window_margin);
      if (j >= w.j_lo && j <= w.j_hi) return Regime::critical;
    } catch (const Error&) {
    }
  }
  return Regime::bulk;
}

std::vector<double> norm_table(const RadialPotential& pot,
                               const Droplet& droplet,
                               const CriticalityData* crit, long n,
                               const QuadratureSpec& spec, int threads) {
  if (n < 1) fail(ErrorCode::config, "norm_table: n < 1");
  std::vector<double> out(static_cast<size_t>(n));
  int nw = threads > 0 ? threads
                       : int(std::thread::hardware_concurrency());
  nw = std::max(1, std::min<int>(nw, 64));
  std::vector<std::thread> pool;
  std::atomic<long> next{0};
  std::exception_ptr first_error;
  std::mutex err_mu;
  auto work = [&] {
    try {
      for (;;) {
        const long j = next.fetch_add(1);
        if (j >= n) break;
        out[size_t(j)] = log_norm_exact(pot, droplet, crit, j, n, spec).log_u;
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(err_mu);
      if (!first_error) first_error = std::current_exception();
      next.store(n);
    }
  };
  if (nw == 1) {
    work();
  } else {
    pool.reserve(size_t(nw));
    for (int t = 0; t < nw; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  if (first_error) std::rethrow_exception(first_error);
  return out;
}

EulerMaclaurinResult euler_maclaurin(
    const std::function<double(double, int)>& f, long p, long q, int k,
    const std::function<double(double)>* d2k) {
  if (k <= 0 || k > 5) fail(ErrorCode::config, "euler_maclaurin: k in [1,5]");
  if (q <= p) fail(ErrorCode::config, "euler_maclaurin: need q > p");
  static const double kB2[5] = {1.0 / 6.0, -1.0 / 30.0, 1.0 / 42.0,
                                -1.0 / 30.0, 5.0 / 66.0};
  QuadResult integral = integrate_gk([&](double x) { return f(x, 0); },
                                     double(p), double(q), 1e-13);
  double out = integral.value + 0.5 * (f(double(p), 0) + f(double(q), 0));
  double fact = 1.0;
  for (int i = 1; i <= k; ++i) {
    fact *= double(2 * i - 1) * double(2 * i);  // (2i)!
    out += kB2[i - 1] / fact *
           (f(double(q), 2 * i - 1) - f(double(p), 2 * i - 1));
  }
  EulerMaclaurinResult res;
  res.value = out;
  if (d2k) {
    // R_{2k} bound: c_{2k} int |f^{(2k)}|, c_{2k} = 2 zeta(2k)/(2 pi)^{2k}.
    static const double kZeta2k[5] = {1.6449340668482264, 1.0823232337111382,
                                      1.0173430619844491, 1.0040773561979443,
                                      1.0009945751278181};
    const double c2k = 2.0 * kZeta2k[k - 1] /
                       std::pow(2.0 * M_PI, 2.0 * double(k));
    QuadResult mag = integrate_gk(
        [&](double x) { return std::fabs((*d2k)(x)); }, double(p), double(q),
        1e-8);
    res.error_bound = c2k * mag.value;
  }
  return res;
}

}  // namespace cg
