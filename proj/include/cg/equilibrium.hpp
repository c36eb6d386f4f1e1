#ifndef CG_EQUILIBRIUM_HPP
#define CG_EQUILIBRIUM_HPP

#include "cg/potential.hpp"

namespace cg {

// Droplet radii for the radial equilibrium measure: r1 solves
// r q'(r) = 2, r0 is 0 (disk) or the largest root of q' below r1.
Droplet find_droplet(const RadialPotential& pot);

// Radius r_tau solving r q'(r) = 2 tau on [r0, r1], for tau in [0, 1].
double r_of_tau(const RadialPotential& pot, const Droplet& droplet,
                double tau);

// Localization map p(x) = ((x + r*) q'(x + r*) - r* q'(r*)) / 2, the mass
// between the critical ring and radius r* + x.
double p_map(const RadialPotential& pot, const CriticalityData& crit,
             double x);

struct WindowBounds {
  double j_center = 0.0;  // n tau*
  long j_lo = 0;
  long j_hi = 0;  // inclusive
  double margin = 0.0;  // M used
};

// Indices j whose saddle radius lies within M log n * n^{-1/(2m+2)} of the
// critical ring.
WindowBounds window_bounds(const RadialPotential& pot, const Droplet& droplet,
                           const CriticalityData& crit, long n, double margin);

// Weighted energy I_Q of the equilibrium measure.
double equilibrium_energy(const RadialPotential& pot, const Droplet& droplet,
                          double rel_tol = 1e-9);

// Entropy-like integral E_Q = int log(Delta Q / 4) d nu.
double equilibrium_entropy(const RadialPotential& pot, const Droplet& droplet,
                           const CriticalityData* crit = nullptr,
                           double rel_tol = 1e-10);

}  // namespace cg

#endif
