#include "cg/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "cg/errors.hpp"

namespace cg {

namespace {

// Gauss-Kronrod 15-point nodes/weights with the embedded 7-point Gauss rule.
const double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
const double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
const double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct GkEval {
  double value;
  double error;
};

GkEval gk15(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = f(c);
  double resg = fc * kWg[3];
  double resk = fc * kWgk[7];
  for (int i = 0; i < 7; ++i) {
    const double x = h * kXgk[i];
    const double fsum = f(c - x) + f(c + x);
    resk += kWgk[i] * fsum;
    if (i % 2 == 1) resg += kWg[i / 2] * fsum;
  }
  GkEval out;
  out.value = resk * h;
  out.error = std::fabs((resk - resg) * h);
  return out;
}

// Hard cap on function evaluations per integrate_gk call: keeps a
// noise-limited integrand (where the local error and the halved tolerance
// shrink at the same rate) from recursing without bound.
constexpr long kMaxEvals = 2000000;

void adapt(const std::function<double(double)>& f, double a, double b,
           double tol, int depth, int max_depth, QuadResult* acc) {
  GkEval e = gk15(f, a, b);
  acc->evaluations += 15;
  if (e.error <= tol || depth >= max_depth ||
      acc->evaluations > kMaxEvals) {
    acc->value += e.value;
    acc->error += e.error;
    if (e.error > tol) acc->converged = false;
    return;
  }
  const double c = 0.5 * (a + b);
  adapt(f, a, c, 0.5 * tol, depth + 1, max_depth, acc);
  adapt(f, c, b, 0.5 * tol, depth + 1, max_depth, acc);
}

}  // namespace

QuadResult integrate_gk(const std::function<double(double)>& f, double a,
                        double b, double rel_tol, double abs_tol,
                        int max_depth) {
  QuadResult out;
  if (a == b) return out;
  double sign = 1.0;
  if (a > b) {
    std::swap(a, b);
    sign = -1.0;
  }
  GkEval coarse = gk15(f, a, b);
  out.evaluations = 15;
  double tol = std::max(abs_tol, rel_tol * std::fabs(coarse.value));
  tol = std::max(tol, 1e-300);
  if (coarse.error <= tol) {
    out.value = sign * coarse.value;
    out.error = coarse.error;
    return out;
  }
  QuadResult acc;
  const double c = 0.5 * (a + b);
  adapt(f, a, c, 0.5 * tol, 1, max_depth, &acc);
  adapt(f, c, b, 0.5 * tol, 1, max_depth, &acc);
  // One refinement pass: if the first estimate badly misjudged the scale,
  // redo with a tolerance anchored to the refined value.
  double tol2 = std::max(abs_tol, rel_tol * std::fabs(acc.value));
  if (acc.error > tol2 && tol2 < tol) {
    QuadResult acc2;
    adapt(f, a, c, 0.5 * tol2, 1, max_depth, &acc2);
    adapt(f, c, b, 0.5 * tol2, 1, max_depth, &acc2);
    acc2.evaluations += acc.evaluations;
    acc = acc2;
  }
  out.value = sign * acc.value;
  out.error = acc.error;
  out.evaluations += acc.evaluations;
  out.converged = acc.converged;
  return out;
}

QuadResult integrate_gk_split(const std::function<double(double)>& f, double a,
                              double b, const std::vector<double>& splits,
                              double rel_tol, double abs_tol, int max_depth) {
  std::vector<double> pts;
  pts.push_back(a);
  for (double s : splits)
    if (s > a && s < b) pts.push_back(s);
  pts.push_back(b);
  std::sort(pts.begin(), pts.end());
  QuadResult out;
  for (size_t i = 0; i + 1 < pts.size(); ++i) {
    QuadResult piece =
        integrate_gk(f, pts[i], pts[i + 1], rel_tol, abs_tol, max_depth);
    out.value += piece.value;
    out.error += piece.error;
    out.evaluations += piece.evaluations;
    out.converged = out.converged && piece.converged;
  }
  return out;
}

QuadResult integrate_tanh_sinh(const std::function<double(double)>& f,
                               double a, double b, double rel_tol,
                               int max_level) {
  QuadResult out;
  if (a == b) return out;
  const double c = 0.5 * (a + b);
  const double d = 0.5 * (b - a);
  const double lambda = 1.57079632679489661923;  // pi/2
  const double t_max = 6.1;

  auto node = [&](double t, double* x, double* w) {
    const double s = lambda * std::sinh(t);
    const double ch = std::cosh(s);
    *x = c + d * std::tanh(s);
    *w = d * lambda * std::cosh(t) / (ch * ch);
  };

  double h = 1.0;
  double x0, w0;
  node(0.0, &x0, &w0);
  double sum = w0 * f(x0);
  out.evaluations = 1;
  // Level 0 nodes at +-h, +-2h, ...
  for (double t = h; t <= t_max; t += h) {
    double xp, wp, xm, wm;
    node(t, &xp, &wp);
    node(-t, &xm, &wm);
    if (wp > 1e-320 && xp > a && xp < b) sum += wp * f(xp);
    if (wm > 1e-320 && xm > a && xm < b) sum += wm * f(xm);
    out.evaluations += 2;
  }
  double prev = sum * h;
  for (int level = 1; level <= max_level; ++level) {
    h *= 0.5;
    double add = 0.0;
    for (double t = h; t <= t_max; t += 2.0 * h) {
      double xp, wp, xm, wm;
      node(t, &xp, &wp);
      node(-t, &xm, &wm);
      if (wp > 1e-320 && xp > a && xp < b) add += wp * f(xp);
      if (wm > 1e-320 && xm > a && xm < b) add += wm * f(xm);
      out.evaluations += 2;
    }
    sum += add;
    const double cur = sum * h;
    const double diff = std::fabs(cur - prev);
    prev = cur;
    if (level >= 3 && diff <= rel_tol * std::max(std::fabs(cur), 1e-300)) {
      out.value = cur;
      out.error = diff;
      return out;
    }
  }
  out.value = prev;
  out.error = std::fabs(prev) * 1e-8;
  out.converged = false;
  return out;
}

double brent_root(const std::function<double(double)>& f, double a, double b,
                  double xtol, int max_iter) {
  double fa = f(a), fb = f(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if (fa * fb > 0.0) fail(ErrorCode::numeric, "brent_root: no sign change");
  double c = a, fc = fa, d = b - a, e = d;
  for (int it = 0; it < max_iter; ++it) {
    if (std::fabs(fc) < std::fabs(fb)) {
      a = b;
      b = c;
      c = a;
      fa = fb;
      fb = fc;
      fc = fa;
    }
    const double tol1 = 2.0 * 2.220446049250313e-16 * std::fabs(b) + 0.5 * xtol;
    const double xm = 0.5 * (c - b);
    if (std::fabs(xm) <= tol1 || fb == 0.0) return b;
    if (std::fabs(e) >= tol1 && std::fabs(fa) > std::fabs(fb)) {
      double p, q, r;
      const double s = fb / fa;
      if (a == c) {
        p = 2.0 * xm * s;
        q = 1.0 - s;
      } else {
        q = fa / fc;
        r = fb / fc;
        p = s * (2.0 * xm * q * (q - r) - (b - a) * (r - 1.0));
        q = (q - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) q = -q;
      p = std::fabs(p);
      if (2.0 * p < std::min(3.0 * xm * q - std::fabs(tol1 * q),
                             std::fabs(e * q))) {
        e = d;
        d = p / q;
      } else {
        d = xm;
        e = d;
      }
    } else {
      d = xm;
      e = d;
    }
    a = b;
    fa = fb;
    b += (std::fabs(d) > tol1) ? d : (xm > 0.0 ? tol1 : -tol1);
    fb = f(b);
    if ((fb > 0.0) == (fc > 0.0)) {
      c = a;
      fc = fa;
      d = b - a;
      e = d;
    }
  }
  return b;
}

double brent_min(const std::function<double(double)>& f, double a, double b,
                 double xtol, int max_iter) {
  const double golden = 0.3819660112501051;
  double x = a + golden * (b - a), w = x, v = x;
  double fx = f(x), fw = fx, fv = fx;
  double d = 0.0, e = 0.0;
  for (int it = 0; it < max_iter; ++it) {
    const double m = 0.5 * (a + b);
    const double tol1 = xtol * std::fabs(x) + 1e-15;
    const double tol2 = 2.0 * tol1;
    if (std::fabs(x - m) <= tol2 - 0.5 * (b - a)) return x;
    bool parabolic = false;
    double u;
    if (std::fabs(e) > tol1) {
      double r = (x - w) * (fx - fv);
      double q = (x - v) * (fx - fw);
      double p = (x - v) * q - (x - w) * r;
      q = 2.0 * (q - r);
      if (q > 0.0) p = -p;
      q = std::fabs(q);
      const double e_old = e;
      e = d;
      if (std::fabs(p) < std::fabs(0.5 * q * e_old) && p > q * (a - x) &&
          p < q * (b - x)) {
        d = p / q;
        u = x + d;
        if (u - a < tol2 || b - u < tol2) d = (x < m) ? tol1 : -tol1;
        parabolic = true;
      }
    }
    if (!parabolic) {
      e = (x < m) ? (b - x) : (a - x);
      d = golden * e;
    }
    u = x + ((std::fabs(d) >= tol1) ? d : (d > 0.0 ? tol1 : -tol1));
    const double fu = f(u);
    if (fu <= fx) {
      if (u < x)
        b = x;
      else
        a = x;
      v = w;
      fv = fw;
      w = x;
      fw = fx;
      x = u;
      fx = fu;
    } else {
      if (u < x)
        a = u;
      else
        b = u;
      if (fu <= fw || w == x) {
        v = w;
        fv = fw;
        w = u;
        fw = fu;
      } else if (fu <= fv || v == x || v == w) {
        v = u;
        fv = fu;
      }
    }
  }
  return x;
}

double finite_difference(const std::function<double(double)>& f, double x,
                         int k, double h) {
  if (k < 1 || k > 6) fail(ErrorCode::unsupported_order, "finite_difference");
  // Central stencil for the k-th derivative via binomial differences.
  auto stencil = [&](double step) {
    double num = 0.0;
    double binom = 1.0;
    for (int i = 0; i <= k; ++i) {
      const double sign = ((k - i) % 2 == 0) ? 1.0 : -1.0;
      num += sign * binom * f(x + (i - 0.5 * k) * step);
      binom *= double(k - i) / double(i + 1);
    }
    double denom = 1.0;
    for (int i = 0; i < k; ++i) denom *= step;
    return num / denom;
  };
  // Richardson extrapolation (error is O(h^2) for central stencils).
  const double d1 = stencil(h);
  const double d2 = stencil(0.5 * h);
  return (4.0 * d2 - d1) / 3.0;
}

}  // namespace cg
