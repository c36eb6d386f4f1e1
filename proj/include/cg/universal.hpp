#ifndef CG_UNIVERSAL_HPP
#define CG_UNIVERSAL_HPP

#include <complex>

namespace cg {

// P_m(y) = sum_{k=2}^{2m+2} y^k / ((2m+2-k)! k!), nonnegative with a double
// zero at y = 0.
double p_poly(int m, double y);

// x^{2m+2} P_m(y/x - 1) in homogeneous form, stable at x = 0:
// (y^{2m+2} - (2m+2) y x^{2m+1} + (2m+1) x^{2m+2}) / (2m+2)!.
double homogeneous_exponent(int m, double y, double x);

// Pearcey-type integral P_m(theta) = int_R exp(-theta P_m(y)) dy, theta > 0.
double pearcey(int m, double theta);

// f_1(x) for criticality gamma: f_1(x) = |x| P_1(gamma x^4) for x != 0
// (substitute u = x w in the defining integral), with the x = 0 limit
// 2 Gamma(5/4) (24/gamma)^{1/4}.
double f1(double gamma, double x);

// h_1(x) = sqrt(gamma / (4 pi)) |x| f_1(x).
double h1(double gamma, double x);

// C_m = int_R x^{2m} log( x^{2m} P_m(x^{2m+2}) / sqrt(2 pi (2m)!) ) dx.
// Convergent for m = 1; for m >= 2 the tail is handled by the same
// inverse-square model after a fixed cutoff, which makes the value
// cutoff-dependent (reported as experimental).
double universal_constant(int m, double rel_tol = 1e-9,
                          double cutoff = 200.0);

// Limiting kernel K_*^{(m)}(xi1, xi2).
std::complex<double> k_star(int m, std::complex<double> xi1,
                            std::complex<double> xi2);

// One-point function rho^{(m)}(xi) = K_*^{(m)}(xi, xi); depends only on
// Re xi.
double rho_star(int m, std::complex<double> xi);

}  // namespace cg

#endif
