#include "coulombgas.h"

#include <cstdio>
#include <cstring>
#include <memory>
#include <mutex>
#include <string>

#include "cg/equilibrium.hpp"
#include "cg/errors.hpp"
#include "cg/freeenergy.hpp"
#include "cg/kernel.hpp"
#include "cg/norms.hpp"
#include "cg/potential.hpp"
#include "cg/sampler.hpp"
#include "cg/universal.hpp"

struct cg_potential {
  std::shared_ptr<const cg::RadialPotential> impl;
};

struct cg_model {
  cg::ModelConstants mc;
  // C_m is computed lazily on the first prediction request.
  mutable std::mutex mu;
  mutable bool have_cm = false;
};

struct cg_norm_table {
  long n = 0;
  std::vector<double> log_u;
};

struct cg_sampler {
  std::unique_ptr<cg::LayerSampler> impl;
};

namespace {

thread_local std::string g_last_error;

cg_status set_error(const cg::Error& e) {
  g_last_error = e.what();
  return e.code() == cg::ErrorCode::numeric ? CG_ERR_NUMERIC : CG_ERR_CONFIG;
}

cg_status set_error(const std::exception& e) {
  g_last_error = e.what();
  return CG_ERR_NUMERIC;
}

template <typename Fn>
cg_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return CG_OK;
  } catch (const cg::Error& e) {
    return set_error(e);
  } catch (const std::exception& e) {
    return set_error(e);
  }
}

cg_status require(bool ok, const char* msg) {
  if (ok) return CG_OK;
  g_last_error = msg;
  return CG_ERR_CONFIG;
}

const cg::ModelConstants& mc_of(const cg_model* m) { return m->mc; }

double ensure_cm(const cg_model* m) {
  std::lock_guard<std::mutex> lock(m->mu);
  if (!m->have_cm && m->mc.critical) {
    const_cast<cg::ModelConstants&>(m->mc).c_m =
        cg::universal_constant(m->mc.crit.m);
    m->have_cm = true;
  }
  return m->mc.c_m;
}

}  // namespace

extern "C" {

const char* cg_last_error(void) { return g_last_error.c_str(); }

cg_status cg_potential_cubic(double t, double c, cg_potential** out) {
  if (!out) return require(false, "null output pointer");
  return guarded([&] {
    *out = new cg_potential{std::make_shared<cg::PolyLogPotential>(
        cg::PolyLogPotential::cubic(t, c))};
  });
}

cg_status cg_potential_quadratic(double a, cg_potential** out) {
  if (!out) return require(false, "null output pointer");
  return guarded([&] {
    *out = new cg_potential{std::make_shared<cg::PolyLogPotential>(
        cg::PolyLogPotential::quadratic(a))};
  });
}

cg_status cg_potential_profile_poly(const int* powers, const double* coeffs,
                                    int n_terms, double inner_radius,
                                    double base_slope, cg_potential** out) {
  if (!out || !powers || !coeffs || n_terms < 1)
    return require(false, "profile_poly: bad arguments");
  return guarded([&] {
    std::vector<std::pair<int, double>> terms;
    for (int i = 0; i < n_terms; ++i) terms.emplace_back(powers[i], coeffs[i]);
    *out = new cg_potential{std::make_shared<cg::PolyLogPotential>(
        cg::PolyLogPotential::from_laplacian_profile(terms, inner_radius,
                                                     base_slope))};
  });
}

cg_status cg_potential_profile_grid(const double* r, const double* w,
                                    int n_points, double inner_radius,
                                    double base_slope, cg_potential** out) {
  if (!out || !r || !w || n_points < 4)
    return require(false, "profile_grid: bad arguments");
  return guarded([&] {
    *out = new cg_potential{std::make_shared<cg::GridProfilePotential>(
        std::vector<double>(r, r + n_points),
        std::vector<double>(w, w + n_points), inner_radius, base_slope)};
  });
}

void cg_potential_free(cg_potential* pot) { delete pot; }

cg_status cg_potential_eval(const cg_potential* pot, double r, int order,
                            double* out) {
  if (!pot || !out) return require(false, "null argument");
  return guarded([&] { *out = pot->impl->derivative(r, order); });
}

cg_status cg_potential_laplacian(const cg_potential* pot, double r, int order,
                                 double* out) {
  if (!pot || !out) return require(false, "null argument");
  return guarded([&] { *out = pot->impl->laplacian(r, order); });
}

cg_status cg_model_build(const cg_potential* pot, cg_model** out) {
  if (!pot || !out) return require(false, "null argument");
  return guarded([&] {
    auto* m = new cg_model;
    m->mc = cg::model_constants(*pot->impl, /*with_universal=*/false);
    *out = m;
  });
}

cg_status cg_model_get(const cg_model* model, cg_model_info* out) {
  if (!model || !out) return require(false, "null argument");
  const cg::ModelConstants& mc = mc_of(model);
  out->r0 = mc.droplet.r0;
  out->r1 = mc.droplet.r1;
  out->disk = mc.droplet.disk ? 1 : 0;
  out->critical = mc.critical ? 1 : 0;
  out->r_star = mc.critical ? mc.crit.r_star : 0.0;
  out->tau_star = mc.critical ? mc.crit.tau_star : 0.0;
  out->m = mc.critical ? mc.crit.m : 0;
  out->gamma = mc.critical ? mc.crit.gamma : 0.0;
  out->kappa = mc.critical ? mc.crit.kappa : 0.0;
  out->i_q = mc.i_q;
  out->e_q = mc.e_q;
  return CG_OK;
}

void cg_model_free(cg_model* model) { delete model; }

cg_status cg_validate(const cg_potential* pot, int* admissible, char* detail,
                      int detail_len) {
  if (!pot || !admissible) return require(false, "null argument");
  return guarded([&] {
    cg::Droplet d = cg::find_droplet(*pot->impl);
    cg::AdmissibilityReport rep = cg::validate_admissibility(*pot->impl, d);
    *admissible = rep.admissible ? 1 : 0;
    if (detail && detail_len > 0) {
      std::snprintf(detail, size_t(detail_len), "%s", rep.detail.c_str());
    }
  });
}

cg_status cg_pearcey(int m, double theta, double* out) {
  if (!out) return require(false, "null argument");
  return guarded([&] { *out = cg::pearcey(m, theta); });
}

cg_status cg_f1(double gamma, double x, double* out) {
  if (!out) return require(false, "null argument");
  return guarded([&] { *out = cg::f1(gamma, x); });
}

cg_status cg_universal_constant(int m, double* out) {
  if (!out) return require(false, "null argument");
  return guarded([&] { *out = cg::universal_constant(m); });
}

cg_status cg_kstar(int m, double re1, double im1, double re2, double im2,
                   double* out_re, double* out_im) {
  if (!out_re || !out_im) return require(false, "null argument");
  return guarded([&] {
    const std::complex<double> v =
        cg::k_star(m, {re1, im1}, {re2, im2});
    *out_re = v.real();
    *out_im = v.imag();
  });
}

cg_status cg_rho(int m, double re_xi, double* out) {
  if (!out) return require(false, "null argument");
  return guarded([&] { *out = cg::rho_star(m, re_xi); });
}

cg_status cg_log_norm(const cg_potential* pot, const cg_model* model, long j,
                      long n, int regime, double* log_u, double* r_tau,
                      double* x, double* err_est, int* regime_used) {
  if (!pot || !model || !log_u) return require(false, "null argument");
  return guarded([&] {
    const cg::ModelConstants& mc = mc_of(model);
    const cg::CriticalityData* crit = mc.critical ? &mc.crit : nullptr;
    int mode = regime;
    if (mode == 4)
      mode = int(cg::classify_regime(*pot->impl, mc.droplet, crit, j, n));
    cg::NormEntry e;
    switch (mode) {
      case 0:
        e = cg::log_norm_exact(*pot->impl, mc.droplet, crit, j, n);
        break;
      case 1:
        e = cg::log_norm_bulk_asym(*pot->impl, mc.droplet, crit, j, n);
        break;
      case 2:
        if (!crit)
          cg::fail(cg::ErrorCode::regime_inapplicable,
                   "critical regime needs a critical potential");
        e = cg::log_norm_critical_asym(*pot->impl, mc.droplet, *crit, j, n);
        break;
      case 3:
        e = cg::log_norm_origin_asym(*pot->impl, mc.droplet, j, n);
        break;
      default:
        cg::fail(cg::ErrorCode::config, "unknown regime selector");
    }
    *log_u = e.log_u;
    if (r_tau) *r_tau = e.r_tau;
    if (x) *x = e.x;
    if (err_est) *err_est = e.err_est;
    if (regime_used) *regime_used = int(e.regime);
  });
}

cg_status cg_norm_table_build(const cg_potential* pot, const cg_model* model,
                              long n, int threads, cg_norm_table** out) {
  if (!pot || !model || !out) return require(false, "null argument");
  return guarded([&] {
    const cg::ModelConstants& mc = mc_of(model);
    auto* t = new cg_norm_table;
    t->n = n;
    t->log_u = cg::norm_table(*pot->impl, mc.droplet,
                              mc.critical ? &mc.crit : nullptr, n, {},
                              threads);
    *out = t;
  });
}

long cg_norm_table_n(const cg_norm_table* table) {
  return table ? table->n : 0;
}

cg_status cg_norm_table_get(const cg_norm_table* table, long j,
                            double* log_u) {
  if (!table || !log_u) return require(false, "null argument");
  if (j < 0 || j >= table->n) return require(false, "norm table index");
  *log_u = table->log_u[size_t(j)];
  return CG_OK;
}

void cg_norm_table_free(cg_norm_table* table) { delete table; }

cg_status cg_window_bounds(const cg_potential* pot, const cg_model* model,
                           long n, double margin, long* j_lo, long* j_hi,
                           double* j_center) {
  if (!pot || !model || !j_lo || !j_hi) return require(false, "null argument");
  return guarded([&] {
    const cg::ModelConstants& mc = mc_of(model);
    if (!mc.critical)
      cg::fail(cg::ErrorCode::not_critical,
               "window bounds need a critical potential");
    cg::WindowBounds w =
        cg::window_bounds(*pot->impl, mc.droplet, mc.crit, n, margin);
    *j_lo = w.j_lo;
    *j_hi = w.j_hi;
    if (j_center) *j_center = w.j_center;
  });
}

cg_status cg_kernel(const cg_potential* pot, const cg_model* model,
                    const cg_norm_table* table, double re1, double im1,
                    double re2, double im2, int windowed, double margin,
                    double* modulus, double* phase) {
  if (!pot || !model || !table || !modulus)
    return require(false, "null argument");
  return guarded([&] {
    const cg::ModelConstants& mc = mc_of(model);
    cg::KernelValue v;
    if (windowed) {
      if (!mc.critical)
        cg::fail(cg::ErrorCode::not_critical,
                 "windowed kernel needs a critical potential");
      v = cg::kernel_windowed(*pot->impl, mc.droplet, mc.crit, table->log_u,
                              table->n, {re1, im1}, {re2, im2}, margin);
    } else {
      v = cg::kernel_full(*pot->impl, table->log_u, table->n, {re1, im1},
                          {re2, im2});
    }
    *modulus = v.modulus;
    if (phase) *phase = v.phase;
  });
}

cg_status cg_double_scaling_error(const cg_potential* pot,
                                  const cg_model* model,
                                  const cg_norm_table* table, double xi1_re,
                                  double xi1_im, double xi2_re, double xi2_im,
                                  double margin, double* err,
                                  double* kn_scaled, double* kstar_scaled) {
  if (!pot || !model || !table || !err) return require(false, "null argument");
  return guarded([&] {
    const cg::ModelConstants& mc = mc_of(model);
    if (!mc.critical)
      cg::fail(cg::ErrorCode::not_critical,
               "double-scaling comparison needs a critical potential");
    *err = cg::double_scaling_error(*pot->impl, mc.droplet, mc.crit,
                                    table->log_u, table->n,
                                    {xi1_re, xi1_im}, {xi2_re, xi2_im},
                                    margin, kn_scaled, kstar_scaled);
  });
}

cg_status cg_expected_count(const cg_potential* pot,
                            const cg_norm_table* table, double center,
                            double radius, double* out) {
  if (!pot || !table || !out) return require(false, "null argument");
  return guarded([&] {
    *out = cg::expected_count(*pot->impl, table->log_u, table->n, center,
                              radius);
  });
}

cg_status cg_mean_level_spacing(const cg_potential* pot,
                                const cg_model* model,
                                const cg_norm_table* table, double* measured,
                                double* predicted_rho0,
                                double* predicted_profile) {
  if (!pot || !model || !table || !measured)
    return require(false, "null argument");
  return guarded([&] {
    const cg::ModelConstants& mc = mc_of(model);
    if (!mc.critical)
      cg::fail(cg::ErrorCode::not_critical,
               "mean level spacing needs a critical potential");
    cg::SpacingResult s = cg::mean_level_spacing(*pot->impl, mc.droplet,
                                                 mc.crit, table->log_u,
                                                 table->n);
    *measured = s.measured;
    if (predicted_rho0) *predicted_rho0 = s.predicted_rho0;
    if (predicted_profile) *predicted_profile = s.predicted_profile;
  });
}

cg_status cg_log_partition(const cg_potential* pot, const cg_model* model,
                           long n, int threads, double* out) {
  if (!pot || !model || !out) return require(false, "null argument");
  return guarded([&] {
    const cg::ModelConstants& mc = mc_of(model);
    *out = cg::log_partition(*pot->impl, mc.droplet,
                             mc.critical ? &mc.crit : nullptr, n, {},
                             threads);
  });
}

cg_status cg_prediction(const cg_potential* pot, const cg_model* model,
                        long n, cg_scan_row* row) {
  if (!pot || !model || !row) return require(false, "null argument");
  return guarded([&] {
    cg::ModelConstants mc = mc_of(model);
    mc.c_m = ensure_cm(model);
    cg::ScanRow r = cg::prediction(mc, n);
    row->n = r.n;
    row->log_z = 0.0;
    row->term_n2 = r.term_n2;
    row->term_nlogn = r.term_nlogn;
    row->term_n = r.term_n;
    row->term_quarter = r.term_quarter;
    row->remainder = 0.0;
    row->scaled_remainder = 0.0;
  });
}

cg_status cg_remainder_scan(const cg_potential* pot, const long* n_grid,
                            int count, int threads, cg_scan_row* rows,
                            cg_scan_fit* fit) {
  if (!pot || !n_grid || !rows || count < 1)
    return require(false, "null argument");
  return guarded([&] {
    cg::ScanResult res = cg::remainder_scan(
        *pot->impl, std::vector<long>(n_grid, n_grid + count), {}, threads);
    for (int i = 0; i < count; ++i) {
      const cg::ScanRow& r = res.rows[size_t(i)];
      rows[i] = {r.n,     r.log_z,      r.term_n2,   r.term_nlogn,
                 r.term_n, r.term_quarter, r.remainder, r.scaled_remainder};
    }
    if (fit) {
      fit->a = res.a;
      fit->b = res.b;
      fit->c = res.c;
      fit->a_two_term = res.a_two_term;
      fit->b_two_term = res.b_two_term;
      fit->residual = res.residual;
      fit->condition = res.condition;
      fit->exponent = res.exponent;
    }
  });
}

cg_status cg_sampler_build(const cg_potential* pot, long n, int threads,
                           cg_sampler** out) {
  if (!pot || !out) return require(false, "null argument");
  return guarded([&] {
    auto* s = new cg_sampler;
    s->impl = std::make_unique<cg::LayerSampler>(*pot->impl, n,
                                                 cg::QuadratureSpec{},
                                                 threads);
    *out = s;
  });
}

long cg_sampler_n(const cg_sampler* sampler) {
  return sampler ? sampler->impl->n() : 0;
}

cg_status cg_sampler_draw(const cg_sampler* sampler,
                          unsigned long long seed,
                          unsigned long long sample_id, double* re,
                          double* im) {
  if (!sampler || !re || !im) return require(false, "null argument");
  return guarded([&] {
    cg::PointConfiguration cfg = sampler->impl->sample(seed, sample_id);
    for (long j = 0; j < cfg.n; ++j) {
      re[j] = cfg.points[size_t(j)].real();
      im[j] = cfg.points[size_t(j)].imag();
    }
  });
}

cg_status cg_count_in_disk_stats(const cg_sampler* sampler, double center_re,
                                 double center_im, double radius,
                                 long n_samples, unsigned long long seed,
                                 int threads, double* mean, double* stderr_m) {
  if (!sampler || !mean) return require(false, "null argument");
  return guarded([&] {
    cg::CountStats st = cg::count_in_disk_stats(
        *sampler->impl, {center_re, center_im}, radius, n_samples, seed,
        threads);
    *mean = st.mean;
    if (stderr_m) *stderr_m = st.stderr_mean;
  });
}

cg_status cg_spacing_mc(const cg_sampler* sampler, double center,
                        long n_samples, unsigned long long seed, int threads,
                        double* s_hat, double* stderr_s) {
  if (!sampler || !s_hat) return require(false, "null argument");
  return guarded([&] {
    cg::SpacingMc s =
        cg::spacing_mc(*sampler->impl, center, n_samples, seed, threads);
    *s_hat = s.s_hat;
    if (stderr_s) *stderr_s = s.stderr_s;
  });
}

void cg_sampler_free(cg_sampler* sampler) { delete sampler; }

}  // extern "C"
