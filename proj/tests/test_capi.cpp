#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <cstring>
#include <vector>

#include "doctest.h"

#include "coulombgas.h"

namespace {
const double kSqrt3 = std::sqrt(3.0);
}

TEST_CASE("C API end-to-end on the critical cubic") {
  cg_potential* pot = nullptr;
  REQUIRE(cg_potential_cubic(kSqrt3, 1.0, &pot) == CG_OK);
  double v = 0.0;
  CHECK(cg_potential_eval(pot, 1.0, 0, &v) == CG_OK);
  CHECK(v == doctest::Approx(1.0 / 3.0 - kSqrt3 / 2.0 + 1.0).epsilon(1e-14));
  CHECK(cg_potential_laplacian(pot, 1.0 / kSqrt3, 0, &v) == CG_OK);
  CHECK(v == doctest::Approx(0.0).epsilon(1e-12));

  cg_model* model = nullptr;
  REQUIRE(cg_model_build(pot, &model) == CG_OK);
  cg_model_info info{};
  REQUIRE(cg_model_get(model, &info) == CG_OK);
  CHECK(info.critical == 1);
  CHECK(info.m == 1);
  CHECK(info.r_star == doctest::Approx(1.0 / kSqrt3).epsilon(1e-10));
  CHECK(info.kappa == doctest::Approx(0.5183073248).epsilon(1e-8));
  CHECK(info.i_q == doctest::Approx(0.2039962769).epsilon(1e-8));

  int admissible = -1;
  char detail[256];
  CHECK(cg_validate(pot, &admissible, detail, sizeof detail) == CG_OK);
  CHECK(admissible == 1);

  // Norms through every regime selector.
  double log_u = 0, r_tau = 0, x = 0, err = 0;
  int used = -1;
  CHECK(cg_log_norm(pot, model, 96, 1000, 4, &log_u, &r_tau, &x, &err,
                    &used) == CG_OK);
  CHECK(used == 2);  // the index sits in the critical window
  double log_u_exact = 0;
  CHECK(cg_log_norm(pot, model, 96, 1000, 0, &log_u_exact, nullptr, nullptr,
                    nullptr, nullptr) == CG_OK);
  CHECK(std::fabs(log_u - log_u_exact) < 0.5);

  cg_norm_table* tab = nullptr;
  REQUIRE(cg_norm_table_build(pot, model, 400, 2, &tab) == CG_OK);
  CHECK(cg_norm_table_n(tab) == 400);
  double t0 = 0;
  CHECK(cg_norm_table_get(tab, 0, &t0) == CG_OK);
  CHECK(cg_norm_table_get(tab, 400, &t0) == CG_ERR_CONFIG);

  double modulus = 0, phase = 0;
  CHECK(cg_kernel(pot, model, tab, info.r_star, 0.0, info.r_star, 0.0, 0,
                  2.0, &modulus, &phase) == CG_OK);
  CHECK(modulus > 0.0);
  CHECK(phase == doctest::Approx(0.0));

  double measured = 0, p0 = 0, pp = 0;
  CHECK(cg_mean_level_spacing(pot, model, tab, &measured, &p0, &pp) == CG_OK);
  CHECK(measured > 0.0);

  cg_norm_table_free(tab);
  cg_model_free(model);
  cg_potential_free(pot);
}

TEST_CASE("C API error codes and messages") {
  cg_potential* gin = nullptr;
  REQUIRE(cg_potential_quadratic(1.0, &gin) == CG_OK);
  cg_model* model = nullptr;
  REQUIRE(cg_model_build(gin, &model) == CG_OK);

  long lo = 0, hi = 0;
  CHECK(cg_window_bounds(gin, model, 100, 1.0, &lo, &hi, nullptr) ==
        CG_ERR_CONFIG);
  CHECK(std::strlen(cg_last_error()) > 0);

  double out = 0;
  CHECK(cg_log_norm(gin, model, 0, 10, 9, &out, nullptr, nullptr, nullptr,
                    nullptr) == CG_ERR_CONFIG);
  CHECK(cg_pearcey(0, 1.0, &out) == CG_ERR_CONFIG);
  CHECK(cg_pearcey(1, 1.0, nullptr) == CG_ERR_CONFIG);

  cg_model_free(model);
  cg_potential_free(gin);
}

TEST_CASE("C API universal objects") {
  double v = 0;
  REQUIRE(cg_pearcey(1, 100.0, &v) == CG_OK);
  CHECK(v == doctest::Approx(0.3588266).epsilon(1e-6));
  REQUIRE(cg_rho(1, 0.0, &v) == CG_OK);
  CHECK(v == doctest::Approx(0.5274381914).epsilon(1e-8));
  double re = 0, im = 0;
  REQUIRE(cg_kstar(1, 0.0, 0.0, 0.0, 0.0, &re, &im) == CG_OK);
  CHECK(re == doctest::Approx(0.5274381914).epsilon(1e-8));
  CHECK(im == doctest::Approx(0.0));
  REQUIRE(cg_f1(6.0 * kSqrt3, 0.0, &v) == CG_OK);
  CHECK(v == doctest::Approx(2.2347344313).epsilon(1e-9));
}

TEST_CASE("C API sampler determinism") {
  cg_potential* pot = nullptr;
  REQUIRE(cg_potential_cubic(kSqrt3, 1.0, &pot) == CG_OK);
  cg_sampler* s = nullptr;
  REQUIRE(cg_sampler_build(pot, 30, 0, &s) == CG_OK);
  CHECK(cg_sampler_n(s) == 30);
  std::vector<double> re1(30), im1(30), re2(30), im2(30);
  REQUIRE(cg_sampler_draw(s, 42, 0, re1.data(), im1.data()) == CG_OK);
  REQUIRE(cg_sampler_draw(s, 42, 0, re2.data(), im2.data()) == CG_OK);
  CHECK(re1 == re2);
  CHECK(im1 == im2);
  double s_hat = 0, se = 0;
  REQUIRE(cg_spacing_mc(s, 1.0 / kSqrt3, 200, 1, 0, &s_hat, &se) == CG_OK);
  CHECK(s_hat > 0.0);
  CHECK(se > 0.0);
  cg_sampler_free(s);
  cg_potential_free(pot);
}
