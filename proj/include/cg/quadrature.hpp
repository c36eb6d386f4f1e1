#ifndef CG_QUADRATURE_HPP
#define CG_QUADRATURE_HPP

#include <functional>
#include <vector>

namespace cg {

struct QuadResult {
  double value = 0.0;
  double error = 0.0;
  long evaluations = 0;
  bool converged = true;
};

// Adaptive Gauss-Kronrod 15(7) on a finite interval.
QuadResult integrate_gk(const std::function<double(double)>& f, double a,
                        double b, double rel_tol = 1e-12,
                        double abs_tol = 1e-300, int max_depth = 48);

// Like integrate_gk but splits the interval at the given interior points
// first (use for known kinks or mild singularities in derivatives).
QuadResult integrate_gk_split(const std::function<double(double)>& f, double a,
                              double b, const std::vector<double>& splits,
                              double rel_tol = 1e-12, double abs_tol = 1e-300,
                              int max_depth = 48);

// tanh-sinh ("double exponential") rule; handles integrable endpoint
// singularities such as log terms.
QuadResult integrate_tanh_sinh(const std::function<double(double)>& f,
                               double a, double b, double rel_tol = 1e-12,
                               int max_level = 12);

// Brent root finder on a bracketing interval [a, b] with f(a) f(b) <= 0.
double brent_root(const std::function<double(double)>& f, double a, double b,
                  double xtol = 1e-15, int max_iter = 200);

// Brent minimizer on [a, b]; returns the abscissa of the minimum.
double brent_min(const std::function<double(double)>& f, double a, double b,
                 double xtol = 1e-12, int max_iter = 300);

// Central finite difference for the k-th derivative (k >= 1) with
// Richardson extrapolation; used for grid/custom potentials.
double finite_difference(const std::function<double(double)>& f, double x,
                         int k, double h);

}  // namespace cg

#endif
