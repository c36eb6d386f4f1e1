#ifndef CG_KERNEL_HPP
#define CG_KERNEL_HPP

#include <complex>
#include <optional>
#include <vector>

#include "cg/equilibrium.hpp"
#include "cg/potential.hpp"

namespace cg {

struct KernelValue {
  double modulus = 0.0;
  double phase = 0.0;  // gauge-dependent; only the diagonal phase (0) is
                       // asserted anywhere
  long n = 0;
  std::complex<double> z1, z2;
  bool truncated = false;
  std::optional<WindowBounds> window;
};

// K_n(z1, z2) = sum_{j<n} (z1 conj z2)^j e^{-n(q(|z1|)+q(|z2|))/2} / (2 u_j),
// evaluated with a per-term max shift in the log domain. log_u holds
// log u_j for j = 0..n-1.
KernelValue kernel_full(const RadialPotential& pot,
                        const std::vector<double>& log_u, long n,
                        std::complex<double> z1, std::complex<double> z2);

// Same sum restricted to the critical index window.
KernelValue kernel_windowed(const RadialPotential& pot,
                            const Droplet& droplet,
                            const CriticalityData& crit,
                            const std::vector<double>& log_u, long n,
                            std::complex<double> z1, std::complex<double> z2,
                            double margin);

// | |K_n(z1,z2)| (gamma n)^{-1/(m+1)} - (1/4) |K_*(xi1,xi2)| | at
// z_k = r* + xi_k (gamma n)^{-1/(2m+2)}. Uses the windowed kernel when
// margin > 0, the full kernel otherwise. The two compared scaled moduli
// can be retrieved through the optional out-pointers.
double double_scaling_error(const RadialPotential& pot, const Droplet& droplet,
                            const CriticalityData& crit,
                            const std::vector<double>& log_u, long n,
                            std::complex<double> xi1, std::complex<double> xi2,
                            double margin = 2.0, double* kn_scaled = nullptr,
                            double* kstar_scaled = nullptr);

// E[N(D(center, radius))] = int_{|z-center|<radius} K_n(z,z) dA/pi.
// The dA/pi convention makes the full-plane integral equal n.
double expected_count(const RadialPotential& pot,
                      const std::vector<double>& log_u, long n, double center,
                      double radius, double rel_tol = 1e-9);

struct SpacingResult {
  double measured = 0.0;         // radius s with expected count 1 at r*
  double predicted_rho0 = 0.0;   // (2/sqrt(pi rho(0))) (gamma n)^{-1/(2m+2)}
  double predicted_profile = 0.0;  // from integrating the limiting density
};

SpacingResult mean_level_spacing(const RadialPotential& pot,
                                 const Droplet& droplet,
                                 const CriticalityData& crit,
                                 const std::vector<double>& log_u, long n);

}  // namespace cg

#endif
