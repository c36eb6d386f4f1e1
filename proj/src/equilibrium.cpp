#include "cg/equilibrium.hpp"

#include <algorithm>
#include <cmath>

#include "cg/errors.hpp"
#include "cg/quadrature.hpp"

namespace cg {

namespace {

double mass_flux(const RadialPotential& pot, double r) {
  // r q'(r); twice the equilibrium mass inside radius r (plus the base term).
  return r * pot.derivative(r, 1);
}

}  // namespace

Droplet find_droplet(const RadialPotential& pot) {
  // Outer radius: r q'(r) = 2.
  double b = 1.0;
  int guard = 0;
  while (mass_flux(pot, b) < 2.0) {
    b *= 2.0;
    if (++guard > 60)
      fail(ErrorCode::invalid_potential, "find_droplet: no outer radius");
  }
  double a = 0.5 * b;
  guard = 0;
  while (mass_flux(pot, a) > 2.0) {
    a *= 0.5;
    if (++guard > 200)
      fail(ErrorCode::invalid_potential, "find_droplet: no inner bracket");
  }
  Droplet d;
  d.r1 = brent_root([&](double r) { return mass_flux(pot, r) - 2.0; }, a, b,
                    1e-15);

  // Inner radius: largest sign change of q' below r1 (annulus), else 0.
  d.r0 = 0.0;
  d.disk = true;
  double prev_r = d.r1;
  double prev_v = pot.derivative(prev_r, 1);
  for (double r = 0.9 * d.r1; r > 1e-9 * d.r1; r *= 0.9) {
    const double v = pot.derivative(r, 1);
    if (v <= 0.0 && prev_v > 0.0) {
      d.r0 = brent_root([&](double s) { return pot.derivative(s, 1); }, r,
                        prev_r, 1e-15);
      d.disk = false;
      break;
    }
    prev_r = r;
    prev_v = v;
  }
  const double base = d.disk ? 0.0 : mass_flux(pot, d.r0);
  d.mass = 0.5 * (mass_flux(pot, d.r1) - base);
  return d;
}

double r_of_tau(const RadialPotential& pot, const Droplet& droplet,
                double tau) {
  if (tau < 0.0 || tau > 1.0) fail(ErrorCode::domain, "r_of_tau: tau range");
  if (tau == 0.0) return droplet.r0;
  if (tau == 1.0) return droplet.r1;
  const double lo = droplet.disk ? 1e-14 * droplet.r1 : droplet.r0;
  return brent_root(
      [&](double r) { return mass_flux(pot, r) - 2.0 * tau; }, lo, droplet.r1,
      1e-15);
}

double p_map(const RadialPotential& pot, const CriticalityData& crit,
             double x) {
  const double r = crit.r_star + x;
  if (r < 0.0) fail(ErrorCode::domain, "p_map: radius below zero");
  const double flux = r == 0.0 ? 0.0 : mass_flux(pot, r);
  return 0.5 * (flux - mass_flux(pot, crit.r_star));
}

WindowBounds window_bounds(const RadialPotential& pot, const Droplet& droplet,
                           const CriticalityData& crit, long n, double margin) {
  if (n < 2) fail(ErrorCode::config, "window_bounds: n too small");
  if (margin <= 0.0) fail(ErrorCode::config, "window_bounds: margin");
  const double delta = margin * std::log(double(n)) *
                       std::pow(double(n), -1.0 / double(2 * crit.m + 2));
  const double x_lo = -std::min(delta, crit.r_star - droplet.r0);
  const double x_hi = delta;
  WindowBounds w;
  w.margin = margin;
  w.j_center = double(n) * crit.tau_star;
  const double ell_lo = w.j_center + double(n) * p_map(pot, crit, x_lo);
  const double ell_hi = w.j_center + double(n) * p_map(pot, crit, x_hi);
  w.j_lo = std::max(0L, long(std::ceil(ell_lo)));
  w.j_hi = std::min(n - 1, long(std::floor(ell_hi)));
  if (w.j_lo > w.j_hi)
    fail(ErrorCode::window_empty, "window_bounds: empty index window");
  return w;
}

double equilibrium_energy(const RadialPotential& pot, const Droplet& droplet,
                          double rel_tol) {
  // d nu = (1/2) r Delta Q dr on [r0, r1]; the logarithmic double integral
  // reduces by symmetry to 2 int log r * tau(r) d nu(r) with
  // tau(r) = r q'(r)/2 the mass inside radius r.
  auto density = [&](double r) { return 0.5 * r * pot.laplacian(r, 0); };
  auto integrand = [&](double r) {
    const double tau = 0.5 * mass_flux(pot, r);
    return (pot.value(r) - 2.0 * std::log(r) * tau) * density(r);
  };
  QuadResult q = integrate_tanh_sinh(integrand, droplet.r0, droplet.r1,
                                     rel_tol, 14);
  if (!q.converged)
    fail(ErrorCode::numeric, "equilibrium_energy: quadrature stalled");
  return q.value;
}

double equilibrium_entropy(const RadialPotential& pot, const Droplet& droplet,
                           const CriticalityData* crit, double rel_tol) {
  auto integrand = [&](double r) {
    const double dq = pot.laplacian(r, 0);
    if (dq <= 0.0) return 0.0;  // vanishing minimum: x log x -> 0
    return 0.5 * r * dq * std::log(0.25 * dq);
  };
  std::vector<double> cuts = {droplet.r0, droplet.r1};
  if (crit && crit->r_star > droplet.r0 && crit->r_star < droplet.r1)
    cuts.insert(cuts.begin() + 1, crit->r_star);
  double total = 0.0;
  for (size_t i = 0; i + 1 < cuts.size(); ++i) {
    QuadResult q =
        integrate_tanh_sinh(integrand, cuts[i], cuts[i + 1], rel_tol, 14);
    if (!q.converged)
      fail(ErrorCode::numeric, "equilibrium_entropy: quadrature stalled");
    total += q.value;
  }
  return total;
}

}  // namespace cg
