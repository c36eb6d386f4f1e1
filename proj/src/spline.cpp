#include "cg/spline.hpp"

#include <algorithm>
#include <cmath>

#include "cg/errors.hpp"

namespace cg {

CubicSpline::CubicSpline(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)) {
  const size_t n = x_.size();
  if (n < 2 || y.size() != n)
    fail(ErrorCode::config, "CubicSpline: need >= 2 matched knots");
  for (size_t i = 1; i < n; ++i)
    if (x_[i] <= x_[i - 1])
      fail(ErrorCode::config, "CubicSpline: knots must increase");

  // Solve for second derivatives with natural boundary conditions
  // (tridiagonal, Thomas algorithm).
  std::vector<double> h(n - 1), alpha(n, 0.0), l(n), mu(n), zv(n), m2(n);
  for (size_t i = 0; i + 1 < n; ++i) h[i] = x_[i + 1] - x_[i];
  for (size_t i = 1; i + 1 < n; ++i)
    alpha[i] = 3.0 * ((y[i + 1] - y[i]) / h[i] - (y[i] - y[i - 1]) / h[i - 1]);
  l[0] = 1.0;
  mu[0] = 0.0;
  zv[0] = 0.0;
  for (size_t i = 1; i + 1 < n; ++i) {
    l[i] = 2.0 * (x_[i + 1] - x_[i - 1]) - h[i - 1] * mu[i - 1];
    mu[i] = h[i] / l[i];
    zv[i] = (alpha[i] - h[i - 1] * zv[i - 1]) / l[i];
  }
  m2[n - 1] = 0.0;
  for (size_t i = n - 1; i-- > 0;) m2[i] = zv[i] - mu[i] * m2[i + 1];

  a_.resize(n - 1);
  b_.resize(n - 1);
  c_.resize(n - 1);
  d_.resize(n - 1);
  for (size_t i = 0; i + 1 < n; ++i) {
    a_[i] = y[i];
    c_[i] = m2[i];
    d_[i] = (m2[i + 1] - m2[i]) / (3.0 * h[i]);
    b_[i] = (y[i + 1] - y[i]) / h[i] - h[i] * (2.0 * m2[i] + m2[i + 1]) / 3.0;
  }
  cum_.assign(n, 0.0);
  for (size_t i = 0; i + 1 < n; ++i) {
    const double t = h[i];
    cum_[i + 1] = cum_[i] + t * (a_[i] + t * (b_[i] / 2.0 +
                                              t * (c_[i] / 3.0 +
                                                   t * d_[i] / 4.0)));
  }
}

CubicSpline CubicSpline::pchip(std::vector<double> x, std::vector<double> y) {
  const size_t n = x.size();
  if (n < 2 || y.size() != n)
    fail(ErrorCode::config, "CubicSpline::pchip: need >= 2 matched knots");
  for (size_t i = 1; i < n; ++i)
    if (x[i] <= x[i - 1])
      fail(ErrorCode::config, "CubicSpline::pchip: knots must increase");

  std::vector<double> h(n - 1), del(n - 1), m(n, 0.0);
  for (size_t i = 0; i + 1 < n; ++i) {
    h[i] = x[i + 1] - x[i];
    del[i] = (y[i + 1] - y[i]) / h[i];
  }
  if (n == 2) {
    m[0] = m[1] = del[0];
  } else {
    for (size_t i = 1; i + 1 < n; ++i) {
      if (del[i - 1] * del[i] <= 0.0) {
        m[i] = 0.0;
      } else {
        const double w1 = 2.0 * h[i] + h[i - 1];
        const double w2 = h[i] + 2.0 * h[i - 1];
        m[i] = (w1 + w2) / (w1 / del[i - 1] + w2 / del[i]);
      }
    }
    auto endpoint = [](double h0, double h1, double d0, double d1) {
      double s = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
      if (s * d0 <= 0.0) return 0.0;
      if (d0 * d1 < 0.0 && std::fabs(s) > 3.0 * std::fabs(d0))
        return 3.0 * d0;
      return s;
    };
    m[0] = endpoint(h[0], h[1], del[0], del[1]);
    m[n - 1] = endpoint(h[n - 2], h[n - 3], del[n - 2], del[n - 3]);
  }

  CubicSpline s;
  s.x_ = std::move(x);
  s.a_.resize(n - 1);
  s.b_.resize(n - 1);
  s.c_.resize(n - 1);
  s.d_.resize(n - 1);
  for (size_t i = 0; i + 1 < n; ++i) {
    s.a_[i] = y[i];
    s.b_[i] = m[i];
    s.c_[i] = (3.0 * del[i] - 2.0 * m[i] - m[i + 1]) / h[i];
    s.d_[i] = (m[i] + m[i + 1] - 2.0 * del[i]) / (h[i] * h[i]);
  }
  s.cum_.assign(n, 0.0);
  for (size_t i = 0; i + 1 < n; ++i) {
    const double t = h[i];
    s.cum_[i + 1] =
        s.cum_[i] + t * (s.a_[i] + t * (s.b_[i] / 2.0 +
                                        t * (s.c_[i] / 3.0 +
                                             t * s.d_[i] / 4.0)));
  }
  return s;
}

size_t CubicSpline::locate(double x) const {
  if (x <= x_.front()) return 0;
  if (x >= x_.back()) return x_.size() - 2;
  const size_t idx =
      size_t(std::upper_bound(x_.begin(), x_.end(), x) - x_.begin()) - 1;
  return std::min(idx, x_.size() - 2);
}

double CubicSpline::eval(double x, int k) const {
  if (empty()) fail(ErrorCode::config, "CubicSpline: empty");
  if (k < 0 || k > 3) fail(ErrorCode::unsupported_order, "CubicSpline::eval");
  const size_t i = locate(x);
  const double t = x - x_[i];
  switch (k) {
    case 0:
      return a_[i] + t * (b_[i] + t * (c_[i] + t * d_[i]));
    case 1:
      return b_[i] + t * (2.0 * c_[i] + 3.0 * t * d_[i]);
    case 2:
      return 2.0 * c_[i] + 6.0 * t * d_[i];
    default:
      return 6.0 * d_[i];
  }
}

double CubicSpline::integral_from_start(double x) const {
  if (empty()) fail(ErrorCode::config, "CubicSpline: empty");
  const size_t i = locate(x);
  const double t = x - x_[i];
  return cum_[i] + t * (a_[i] + t * (b_[i] / 2.0 +
                                     t * (c_[i] / 3.0 + t * d_[i] / 4.0)));
}

}  // namespace cg
