#ifndef COULOMBGAS_H
#define COULOMBGAS_H

/* C interface to the radial Coulomb-gas library: potentials, equilibrium
 * constants, orthogonal-polynomial norms, correlation kernels, free-energy
 * scans, and exact sampling. All functions return cg_status; on failure
 * cg_last_error() describes the problem (thread-local). Opaque handles are
 * released with the matching *_free call. */

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  CG_OK = 0,
  CG_ERR_CONFIG = 2,  /* invalid arguments, domains, or preconditions */
  CG_ERR_NUMERIC = 3  /* quadrature/root-finding failure */
} cg_status;

typedef struct cg_potential cg_potential;
typedef struct cg_model cg_model;
typedef struct cg_norm_table cg_norm_table;
typedef struct cg_sampler cg_sampler;

const char* cg_last_error(void);

/* ---- potentials ---- */

/* q(r) = r^3/3 - t r^2/2 + c r (ring-critical iff t = sqrt(3c)). */
cg_status cg_potential_cubic(double t, double c, cg_potential** out);
/* q(r) = r^2 / a. */
cg_status cg_potential_quadratic(double a, cg_potential** out);
/* Potential built from a polynomial Laplacian profile: Delta Q = w(r) with
 * w(r) = sum_i coeffs[i] r^powers[i] (powers >= -1), inner radius a and
 * base slope s0 fixing r q'(r) = a s0 + int_a^r s w(s) ds. */
cg_status cg_potential_profile_poly(const int* powers, const double* coeffs,
                                    int n_terms, double inner_radius,
                                    double base_slope, cg_potential** out);
/* Potential from a sampled Laplacian profile on a grid, cubic-spline
 * interpolated between the nodes. */
cg_status cg_potential_profile_grid(const double* r, const double* w,
                                    int n_points, double inner_radius,
                                    double base_slope, cg_potential** out);
void cg_potential_free(cg_potential* pot);

/* order-th radial derivative of q (order 0 = value). */
cg_status cg_potential_eval(const cg_potential* pot, double r, int order,
                            double* out);
/* order-th radial derivative of Delta Q = q'' + q'/r. */
cg_status cg_potential_laplacian(const cg_potential* pot, double r, int order,
                                 double* out);

/* ---- model constants ---- */

typedef struct {
  double r0, r1;      /* droplet radii */
  int disk;           /* 1 for a disk, 0 for an annulus */
  int critical;       /* 1 when Delta Q has a vanishing ring minimum */
  double r_star, tau_star;
  int m;              /* criticality order */
  double gamma, kappa;
  double i_q, e_q;    /* equilibrium energy and entropy integrals */
} cg_model_info;

cg_status cg_model_build(const cg_potential* pot, cg_model** out);
cg_status cg_model_get(const cg_model* model, cg_model_info* out);
void cg_model_free(cg_model* model);

/* Admissibility report; *admissible is 1/0, detail receives a short
 * description of the first violation (empty when admissible). */
cg_status cg_validate(const cg_potential* pot, int* admissible, char* detail,
                      int detail_len);

/* ---- universal objects ---- */

cg_status cg_pearcey(int m, double theta, double* out);
cg_status cg_f1(double gamma, double x, double* out);
cg_status cg_universal_constant(int m, double* out);
cg_status cg_kstar(int m, double re1, double im1, double re2, double im2,
                   double* out_re, double* out_im);
cg_status cg_rho(int m, double re_xi, double* out);

/* ---- norms ---- */

/* regime: 0 exact, 1 bulk, 2 critical, 3 origin, 4 auto. regime_used
 * receives the regime actually evaluated. */
cg_status cg_log_norm(const cg_potential* pot, const cg_model* model, long j,
                      long n, int regime, double* log_u, double* r_tau,
                      double* x, double* err_est, int* regime_used);

cg_status cg_norm_table_build(const cg_potential* pot, const cg_model* model,
                              long n, int threads, cg_norm_table** out);
long cg_norm_table_n(const cg_norm_table* table);
cg_status cg_norm_table_get(const cg_norm_table* table, long j,
                            double* log_u);
void cg_norm_table_free(cg_norm_table* table);

/* ---- kernel ---- */

cg_status cg_window_bounds(const cg_potential* pot, const cg_model* model,
                           long n, double margin, long* j_lo, long* j_hi,
                           double* j_center);

/* windowed != 0 truncates the sum to the critical index window with the
 * given margin M. */
cg_status cg_kernel(const cg_potential* pot, const cg_model* model,
                    const cg_norm_table* table, double re1, double im1,
                    double re2, double im2, int windowed, double margin,
                    double* modulus, double* phase);

cg_status cg_double_scaling_error(const cg_potential* pot,
                                  const cg_model* model,
                                  const cg_norm_table* table, double xi1_re,
                                  double xi1_im, double xi2_re, double xi2_im,
                                  double margin, double* err,
                                  double* kn_scaled, double* kstar_scaled);

/* E[N(D(center, radius))] under the dA/pi convention. */
cg_status cg_expected_count(const cg_potential* pot,
                            const cg_norm_table* table, double center,
                            double radius, double* out);

cg_status cg_mean_level_spacing(const cg_potential* pot,
                                const cg_model* model,
                                const cg_norm_table* table, double* measured,
                                double* predicted_rho0,
                                double* predicted_profile);

/* ---- free energy ---- */

typedef struct {
  long n;
  double log_z;      /* log(Z_n / (2 pi)^n) */
  double term_n2, term_nlogn, term_n, term_quarter;
  double remainder, scaled_remainder;
} cg_scan_row;

typedef struct {
  double a, b, c;          /* A + B log(n) n^{-e} + C n^{-e} */
  double a_two_term, b_two_term;
  double residual, condition;
  double exponent;         /* e = 1/(2m+2) */
} cg_scan_fit;

cg_status cg_log_partition(const cg_potential* pot, const cg_model* model,
                           long n, int threads, double* out);
cg_status cg_prediction(const cg_potential* pot, const cg_model* model,
                        long n, cg_scan_row* row);
cg_status cg_remainder_scan(const cg_potential* pot, const long* n_grid,
                            int count, int threads, cg_scan_row* rows,
                            cg_scan_fit* fit);

/* ---- sampling ---- */

cg_status cg_sampler_build(const cg_potential* pot, long n, int threads,
                           cg_sampler** out);
long cg_sampler_n(const cg_sampler* sampler);
/* re/im must hold n doubles. */
cg_status cg_sampler_draw(const cg_sampler* sampler,
                          unsigned long long seed,
                          unsigned long long sample_id, double* re,
                          double* im);
cg_status cg_count_in_disk_stats(const cg_sampler* sampler, double center_re,
                                 double center_im, double radius,
                                 long n_samples, unsigned long long seed,
                                 int threads, double* mean, double* stderr_m);
cg_status cg_spacing_mc(const cg_sampler* sampler, double center,
                        long n_samples, unsigned long long seed, int threads,
                        double* s_hat, double* stderr_s);
void cg_sampler_free(cg_sampler* sampler);

#ifdef __cplusplus
}
#endif

#endif /* COULOMBGAS_H */
