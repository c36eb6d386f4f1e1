#ifndef CG_NORMS_HPP
#define CG_NORMS_HPP

#include <functional>
#include <vector>

#include "cg/equilibrium.hpp"
#include "cg/potential.hpp"

namespace cg {

enum class Regime { exact, bulk, critical, origin };

// One orthogonal-polynomial norm: |p_j|^2 = 2 u_j with
// u_j = int_0^inf r^{2j+1} e^{-n q(r)} dr.
struct NormEntry {
  long j = 0;
  long n = 0;
  double log_u = 0.0;
  Regime regime = Regime::exact;
  double x = 0.0;      // n^{1/(2m+2)} (r_tau - r*), when criticality is known
  double r_tau = 0.0;  // saddle radius of V_tau at tau = j/n
  double err_est = 0.0;
};

struct QuadratureSpec {
  double rel_tol = 1e-12;
  double abs_floor = 1e-18;       // relative integrand cutoff for the window
  double window_multiple = 1.0;   // initial halfwidth in units of beta_n
  int max_subdivisions = 48;
};

// Exact norm via the shifted log-domain Laplace integral centered at r_tau.
NormEntry log_norm_exact(const RadialPotential& pot, const Droplet& droplet,
                         const CriticalityData* crit, long j, long n,
                         const QuadratureSpec& spec = {});

// Standard Laplace approximation away from the critical window.
NormEntry log_norm_bulk_asym(const RadialPotential& pot,
                             const Droplet& droplet,
                             const CriticalityData* crit, long j, long n);

// Critical-window asymptotic (m = 1 only):
// log u_j ~ -n V_tau(r_tau) + log r_tau - (1/4) log n + log f1(x).
NormEntry log_norm_critical_asym(const RadialPotential& pot,
                                 const Droplet& droplet,
                                 const CriticalityData& crit, long j, long n);

// Low-index regime for disk potentials with q'(0) = 0, q''(0) > 0:
// log(2 u_j) = -n q(0) - (j+1) log(n q''(0)/2) + log j!.
NormEntry log_norm_origin_asym(const RadialPotential& pot,
                               const Droplet& droplet, long j, long n);

// Picks the regime the asymptotics apply in: origin for small j when
// applicable, critical inside the index window, bulk otherwise.
Regime classify_regime(const RadialPotential& pot, const Droplet& droplet,
                       const CriticalityData* crit, long j, long n,
                       double window_margin = 1.0);

// log u_j for j = 0..n-1 by exact quadrature, parallel over j.
std::vector<double> norm_table(const RadialPotential& pot,
                               const Droplet& droplet,
                               const CriticalityData* crit, long n,
                               const QuadratureSpec& spec = {},
                               int threads = 0);

struct EulerMaclaurinResult {
  double value = 0.0;
  double error_bound = 0.0;  // 0 when no 2k-th derivative was supplied
};

// Sum_{i=p}^{q} f(i) via the Euler-Maclaurin formula with k correction
// terms (k <= 5); f(x, d) returns the d-th derivative, d <= 2k-1. If
// d2k is non-null its absolute integral drives the error bound.
EulerMaclaurinResult euler_maclaurin(
    const std::function<double(double, int)>& f, long p, long q, int k,
    const std::function<double(double)>* d2k = nullptr);

const char* regime_name(Regime r);

}  // namespace cg

#endif
