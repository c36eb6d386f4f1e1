#ifndef CG_SPLINE_HPP
#define CG_SPLINE_HPP

#include <vector>

namespace cg {

// Natural cubic spline on a strictly increasing knot grid.
class CubicSpline {
 public:
  CubicSpline() = default;
  CubicSpline(std::vector<double> x, std::vector<double> y);

  // Monotone piecewise-cubic Hermite interpolant (Fritsch-Carlson slopes):
  // preserves the monotonicity of the data, at the cost of only C^1
  // smoothness. Suited to CDF tables.
  static CubicSpline pchip(std::vector<double> x, std::vector<double> y);

  double operator()(double x) const { return eval(x, 0); }
  // k-th derivative, k = 0..3 (k = 3 is piecewise constant). Outside the
  // grid the spline extrapolates with the boundary polynomial.
  double eval(double x, int k) const;
  // Integral of the spline from the first knot to x.
  double integral_from_start(double x) const;

  bool empty() const { return x_.empty(); }
  double x_min() const { return x_.front(); }
  double x_max() const { return x_.back(); }

 private:
  size_t locate(double x) const;
  std::vector<double> x_, a_, b_, c_, d_;  // piece i: a+b t+c t^2+d t^3
  std::vector<double> cum_;                // integral up to knot i
};

}  // namespace cg

#endif
