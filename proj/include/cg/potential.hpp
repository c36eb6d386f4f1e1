#ifndef CG_POTENTIAL_HPP
#define CG_POTENTIAL_HPP

#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace cg {

// Radially symmetric external potential Q(z) = q(|z|).
class RadialPotential {
 public:
  virtual ~RadialPotential() = default;

  // k-th radial derivative q^{(k)}(r), k = 0 meaning q itself. r > 0
  // (r = 0 allowed when the potential is smooth there).
  virtual double derivative(double r, int k) const = 0;

  // Highest derivative order this potential can produce.
  virtual int max_order() const = 0;

  double value(double r) const { return derivative(r, 0); }

  // Radial part of Delta Q = q'' + q'/r, and its radial derivatives.
  double laplacian(double r, int k = 0) const;
};

struct Droplet {
  double r0 = 0.0;  // inner radius (0 for a disk)
  double r1 = 0.0;  // outer radius
  bool disk = true;
  double mass = 0.0;  // total equilibrium mass, should be 1
};

struct CriticalityData {
  double r_star = 0.0;   // ring where Delta Q has its vanishing minimum
  double tau_star = 0.0; // mass fraction inside the critical ring
  int m = 0;             // half the order of the zero of Delta Q
  double gamma = 0.0;    // (2m)-th radial derivative of Delta Q at r_star
  double kappa = 0.0;    // (r_star/2) gamma^{1/(2m+2)}
};

struct AdmissibilityOptions {
  double r_max = 0.0;        // 0 means auto (several times the droplet edge)
  double growth_margin = 1e-3;
  double laplacian_tol = 1e-9;
  int grid_points = 4000;
};

struct AdmissibilityReport {
  bool admissible = true;
  bool growth_ok = true;
  bool laplacian_ok = true;
  bool single_critical_ring = true;
  double violation_r = 0.0;
  std::string detail;
};

// q(r) = log_coeff * log r + sum_k coeffs[k] r^k. Covers every closed-form
// family used here (Ginibre, perturbed quadratic, cubic-type, profile-built).
class PolyLogPotential final : public RadialPotential {
 public:
  explicit PolyLogPotential(std::vector<double> coeffs, double log_coeff = 0.0);

  double derivative(double r, int k) const override;
  int max_order() const override { return 32; }

  const std::vector<double>& coeffs() const { return coeffs_; }
  double log_coeff() const { return log_coeff_; }

  // q(r) = r^2 / a.
  static PolyLogPotential quadratic(double a);
  // q(r) = r^3/3 - t r^2/2 + c r; ring-critical exactly when t = sqrt(3c),
  // with r* = sqrt(c/3).
  static PolyLogPotential cubic(double t, double c);
  // Build q from a prescribed Laplacian profile: r q'(r) =
  // a*s0 + int_a^r s w(s) ds with w(s) = sum_i w_terms[i].second *
  // s^{w_terms[i].first} (powers >= -1). q is normalized so q(max(a,0)) = 0.
  static PolyLogPotential from_laplacian_profile(
      const std::vector<std::pair<int, double>>& w_terms, double inner_radius,
      double base_slope);

 private:
  std::vector<double> coeffs_;
  double log_coeff_ = 0.0;
};

// Potential given by user-supplied callables for q and (optionally) some
// derivatives; missing orders fall back to finite differences of the last
// analytic one.
class CustomPotential final : public RadialPotential {
 public:
  // derivs[k] computes q^{(k)}; derivs must be non-empty (derivs[0] = q).
  CustomPotential(std::vector<std::function<double(double)>> derivs,
                  int fd_orders = 4, double fd_scale = 1e-3);
  double derivative(double r, int k) const override;
  int max_order() const override;

 private:
  std::vector<std::function<double(double)>> derivs_;
  int fd_orders_;
  double fd_scale_;
};

// Potential defined by a sampled Laplacian profile w(r) = Delta Q on a
// grid, spline-interpolated; r q'(r) = a s0 + int_a^r s w(s) ds. Beyond
// the grid the profile is frozen at its boundary values.
class GridProfilePotential final : public RadialPotential {
 public:
  GridProfilePotential(std::vector<double> r, std::vector<double> w,
                       double inner_radius, double base_slope);
  double derivative(double r, int k) const override;
  int max_order() const override { return 5; }

 private:
  double flux(double r) const;  // r q'(r)
  double w_eval(double r, int k) const;
  class CubicSplineHolder;
  std::shared_ptr<const CubicSplineHolder> s_;
  double a_ = 0.0, s0_ = 0.0;
};

struct CriticalityOptions {
  double search_lo = 1e-6;
  double search_hi = 0.0;   // 0 means auto (droplet edge)
  double zero_tol = 1e-8;   // |Delta Q(r*)| below this counts as critical
  double classify_tol = 1e-5;  // relative threshold for vanishing derivatives
  int max_m = 4;
};

// Locates the vanishing minimum of Delta Q on the positive axis and
// classifies its order. Throws ErrorCode::not_critical if Delta Q stays
// bounded away from zero, ErrorCode::inconsistent_criticality if the first
// non-vanishing derivative is odd-indexed or negative.
CriticalityData detect_criticality(const RadialPotential& pot,
                                   const Droplet& droplet,
                                   const CriticalityOptions& opt = {});

AdmissibilityReport validate_admissibility(const RadialPotential& pot,
                                           const Droplet& droplet,
                                           const AdmissibilityOptions& opt = {});

}  // namespace cg

#endif
