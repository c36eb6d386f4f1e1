#include "cg/freeenergy.hpp"

#include <cmath>

#include "cg/errors.hpp"
#include "cg/universal.hpp"

namespace cg {

namespace {

double pairwise_sum(const std::vector<double>& v, size_t lo, size_t hi) {
  if (hi - lo <= 8) {
    double s = 0.0;
    for (size_t i = lo; i < hi; ++i) s += v[i];
    return s;
  }
  const size_t mid = lo + (hi - lo) / 2;
  return pairwise_sum(v, lo, mid) + pairwise_sum(v, mid, hi);
}

// Least squares for a small column set via normal equations.
void solve_normal(const std::vector<std::vector<double>>& cols,
                  const std::vector<double>& y, std::vector<double>* beta,
                  double* condition) {
  const size_t k = cols.size(), n = y.size();
  std::vector<std::vector<double>> g(k, std::vector<double>(k, 0.0));
  std::vector<double> rhs(k, 0.0);
  for (size_t i = 0; i < k; ++i) {
    for (size_t j = 0; j < k; ++j)
      for (size_t t = 0; t < n; ++t) g[i][j] += cols[i][t] * cols[j][t];
    for (size_t t = 0; t < n; ++t) rhs[i] += cols[i][t] * y[t];
  }
  // Condition estimate: ratio of extreme diagonal pivots after elimination.
  double pivot_max = 0.0, pivot_min = 1e308;
  std::vector<std::vector<double>> a = g;
  std::vector<double> b = rhs;
  for (size_t i = 0; i < k; ++i) {
    size_t p = i;
    for (size_t r = i + 1; r < k; ++r)
      if (std::fabs(a[r][i]) > std::fabs(a[p][i])) p = r;
    std::swap(a[i], a[p]);
    std::swap(b[i], b[p]);
    const double piv = a[i][i];
    if (piv == 0.0) fail(ErrorCode::numeric, "fit: singular normal matrix");
    pivot_max = std::max(pivot_max, std::fabs(piv));
    pivot_min = std::min(pivot_min, std::fabs(piv));
    for (size_t r = i + 1; r < k; ++r) {
      const double f = a[r][i] / piv;
      for (size_t cidx = i; cidx < k; ++cidx) a[r][cidx] -= f * a[i][cidx];
      b[r] -= f * b[i];
    }
  }
  beta->assign(k, 0.0);
  for (size_t i = k; i-- > 0;) {
    double s = b[i];
    for (size_t j = i + 1; j < k; ++j) s -= a[i][j] * (*beta)[j];
    (*beta)[i] = s / a[i][i];
  }
  if (condition) *condition = pivot_max / pivot_min;
}

}  // namespace

ModelConstants model_constants(const RadialPotential& pot,
                               bool with_universal) {
  ModelConstants mc;
  mc.droplet = find_droplet(pot);
  try {
    mc.crit = detect_criticality(pot, mc.droplet);
    mc.critical = true;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::not_critical) throw;
    mc.critical = false;
  }
  mc.i_q = equilibrium_energy(pot, mc.droplet);
  mc.e_q = equilibrium_entropy(pot, mc.droplet,
                               mc.critical ? &mc.crit : nullptr);
  if (mc.critical && with_universal)
    mc.c_m = universal_constant(mc.crit.m);
  return mc;
}

double log_partition(const RadialPotential& pot, const Droplet& droplet,
                     const CriticalityData* crit, long n,
                     const QuadratureSpec& spec, int threads) {
  std::vector<double> log_u = norm_table(pot, droplet, crit, n, spec, threads);
  return pairwise_sum(log_u, 0, log_u.size());
}

ScanRow prediction(const ModelConstants& mc, long n) {
  ScanRow row;
  row.n = n;
  const double nd = double(n);
  row.term_n2 = -nd * nd * mc.i_q;
  row.term_nlogn = -0.5 * nd * std::log(nd);
  row.term_n = nd * (0.5 * std::log(M_PI / 2.0) - 0.5 * mc.e_q);
  if (mc.critical) {
    const int m = mc.crit.m;
    double fact = 1.0;
    for (int i = 2; i <= 2 * m; ++i) fact *= double(i);
    row.term_quarter = std::pow(nd, 1.0 / double(2 * m + 2)) *
                       (mc.crit.kappa / fact) * mc.c_m;
  }
  return row;
}

ScanResult remainder_scan(const RadialPotential& pot,
                          const std::vector<long>& n_grid,
                          const QuadratureSpec& spec, int threads) {
  if (n_grid.size() < 4)
    fail(ErrorCode::config, "remainder_scan: need at least 4 grid points");
  for (size_t i = 1; i < n_grid.size(); ++i)
    if (n_grid[i] <= n_grid[i - 1])
      fail(ErrorCode::config, "remainder_scan: n_grid must increase");

  ModelConstants mc = model_constants(pot);
  ScanResult out;
  out.exponent = mc.critical ? 1.0 / double(2 * mc.crit.m + 2) : 0.25;
  for (long n : n_grid) {
    ScanRow row = prediction(mc, n);
    row.log_z = log_partition(pot, mc.droplet,
                              mc.critical ? &mc.crit : nullptr, n, spec,
                              threads);
    row.remainder = row.log_z - row.term_n2 - row.term_nlogn - row.term_n;
    row.scaled_remainder =
        row.remainder / std::pow(double(n), out.exponent);
    out.rows.push_back(row);
  }

  // Primary three-parameter model captures the slowly decaying
  // log(n) n^{-e} and n^{-e} corrections that desk-scale n still sees.
  const size_t rows = out.rows.size();
  std::vector<double> ones(rows, 1.0), logdecay(rows), decay(rows), y(rows);
  for (size_t i = 0; i < rows; ++i) {
    const double nd = double(out.rows[i].n);
    const double dec = std::pow(nd, -out.exponent);
    logdecay[i] = std::log(nd) * dec;
    decay[i] = dec;
    y[i] = out.rows[i].scaled_remainder;
  }
  std::vector<double> beta;
  solve_normal({ones, logdecay, decay}, y, &beta, &out.condition);
  out.a = beta[0];
  out.b = beta[1];
  out.c = beta[2];
  double ss = 0.0;
  for (size_t i = 0; i < rows; ++i) {
    const double fit = out.a + out.b * logdecay[i] + out.c * decay[i];
    ss += (y[i] - fit) * (y[i] - fit);
  }
  out.residual = std::sqrt(ss / double(rows));

  std::vector<double> beta2;
  solve_normal({ones, logdecay}, y, &beta2, nullptr);
  out.a_two_term = beta2[0];
  out.b_two_term = beta2[1];
  return out;
}

}  // namespace cg
