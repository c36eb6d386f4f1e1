#ifndef CG_FREEENERGY_HPP
#define CG_FREEENERGY_HPP

#include <vector>

#include "cg/norms.hpp"
#include "cg/potential.hpp"

namespace cg {

struct ScanRow {
  long n = 0;
  double log_z = 0.0;  // log(Z_n / (2 pi)^n) = sum_j log u_j
  double term_n2 = 0.0;       // -n^2 I_Q
  double term_nlogn = 0.0;    // -(1/2) n log n
  double term_n = 0.0;        // n [log(pi/2)/2 - E_Q/2]
  double term_quarter = 0.0;  // n^{1/(2m+2)} (kappa/(2m)!) C_m
  double remainder = 0.0;     // log_z - term_n2 - term_nlogn - term_n
  double scaled_remainder = 0.0;  // remainder / n^{1/(2m+2)}
};

// Model constants a scan needs once: droplet, energy, entropy, criticality
// (optional for strictly subharmonic controls), and C_m.
struct ModelConstants {
  Droplet droplet;
  bool critical = false;
  CriticalityData crit;
  double i_q = 0.0;
  double e_q = 0.0;
  double c_m = 0.0;  // universal constant, only when critical
};

// with_universal controls whether C_m is computed (it is only needed for
// predictions and costs a few seconds).
ModelConstants model_constants(const RadialPotential& pot,
                               bool with_universal = true);

// Sum of exact log-norms, pairwise reduction for reproducibility.
double log_partition(const RadialPotential& pot, const Droplet& droplet,
                     const CriticalityData* crit, long n,
                     const QuadratureSpec& spec = {}, int threads = 0);

ScanRow prediction(const ModelConstants& mc, long n);

struct ScanResult {
  std::vector<ScanRow> rows;
  // Primary fit: scaled_remainder = A + B log(n) n^{-e} + C n^{-e},
  // e = 1/(2m+2). A is the extrapolated coefficient.
  double a = 0.0, b = 0.0, c = 0.0;
  double residual = 0.0;        // rms residual of the primary fit
  double condition = 0.0;       // condition estimate of the normal equations
  // Two-parameter alternative A + B log(n) n^{-e}, reported for
  // transparency about the unproven next-order model.
  double a_two_term = 0.0, b_two_term = 0.0;
  double exponent = 0.25;       // 1/(2m+2)
};

ScanResult remainder_scan(const RadialPotential& pot,
                          const std::vector<long>& n_grid,
                          const QuadratureSpec& spec = {}, int threads = 0);

}  // namespace cg

#endif
