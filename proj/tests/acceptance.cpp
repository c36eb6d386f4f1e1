// Acceptance checks for the library: one PASS/FAIL line per criterion.
// Exits nonzero when any blocking criterion fails (criterion 10 is an
// experimental report and never blocks).

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "cg/equilibrium.hpp"
#include "cg/errors.hpp"
#include "cg/freeenergy.hpp"
#include "cg/kernel.hpp"
#include "cg/norms.hpp"
#include "cg/potential.hpp"
#include "cg/sampler.hpp"
#include "cg/universal.hpp"

namespace {

using cg::PolyLogPotential;
using std::complex;

struct Fixture {
  PolyLogPotential pot = PolyLogPotential::cubic(std::sqrt(3.0), 1.0);
  cg::Droplet droplet;
  cg::CriticalityData crit;
  std::map<long, std::vector<double>> tables;

  Fixture() {
    droplet = cg::find_droplet(pot);
    crit = cg::detect_criticality(pot, droplet);
  }
  const std::vector<double>& table(long n) {
    auto it = tables.find(n);
    if (it == tables.end())
      it = tables.emplace(n, cg::norm_table(pot, droplet, &crit, n)).first;
    return it->second;
  }
};

int g_failures = 0;

void report(int idx, bool pass, bool blocking, const std::string& detail,
            double seconds) {
  std::printf("criterion %2d: %s%s  %s  [%.1f s]\n", idx,
              pass ? "PASS" : "FAIL",
              blocking ? "" : " (experimental, non-blocking)", detail.c_str(),
              seconds);
  std::fflush(stdout);
  if (!pass && blocking) ++g_failures;
}

void run(int idx, bool blocking,
         const std::function<bool(std::string*)>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  std::string detail;
  bool pass = false;
  try {
    pass = body(&detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  report(idx, pass, blocking, detail, secs);
}

std::string fmt(const char* f, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof buf, f, ap);
  va_end(ap);
  return buf;
}

}  // namespace

int main() {
  Fixture fx;
  double c1 = 0.0;

  // 1. Universal constant C_1 = 1.603 +- 0.01.
  run(1, true, [&](std::string* d) {
    c1 = cg::universal_constant(1);
    *d = fmt("C_1 = %.7f (target 1.603 +- 0.01)", c1);
    return std::fabs(c1 - 1.603) <= 0.01;
  });

  // 2. Pearcey large-theta asymptotics.
  run(2, true, [&](std::string* d) {
    bool ok = true;
    double worst = 0.0;
    for (double theta : {50.0, 100.0, 400.0}) {
      const double p = cg::pearcey(1, theta);
      const double asym =
          std::sqrt(4.0 * M_PI / theta) * (1.0 + 7.0 / (6.0 * theta));
      const double rel = std::fabs(p / asym - 1.0);
      worst = std::max(worst, rel * theta * theta / 5.0);
      ok = ok && rel <= 5.0 / (theta * theta);
    }
    *d = fmt("worst |P/asym - 1| at %.3f of the 5/theta^2 budget", worst);
    return ok;
  });

  // 3. Gaussian norm oracle u_j = j!/(2 n^{j+1}) for all 0 <= j < n <= 300.
  run(3, true, [&](std::string* d) {
    const PolyLogPotential gauss = PolyLogPotential::quadratic(1.0);
    const cg::Droplet drop = cg::find_droplet(gauss);
    double worst = 0.0;
    for (long n = 1; n <= 300; ++n) {
      const std::vector<double> log_u =
          cg::norm_table(gauss, drop, nullptr, n);
      for (long j = 0; j < n; ++j) {
        const double exact = std::lgamma(double(j) + 1.0) - std::log(2.0) -
                             double(j + 1) * std::log(double(n));
        worst = std::max(worst, std::fabs(log_u[size_t(j)] - exact));
      }
    }
    *d = fmt("max |log u - closed form| = %.3g (budget 1e-9)", worst);
    return worst <= 1e-9;
  });

  // 4. Critical norm asymptotics improve like n^{-1/4}.
  run(4, true, [&](std::string* d) {
    std::vector<double> errs;
    for (long n : {1000L, 4000L, 16000L}) {
      const long j = long(std::floor(double(n) * fx.crit.tau_star));
      const cg::NormEntry ex =
          cg::log_norm_exact(fx.pot, fx.droplet, &fx.crit, j, n);
      const cg::NormEntry as =
          cg::log_norm_critical_asym(fx.pot, fx.droplet, fx.crit, j, n);
      errs.push_back(std::fabs(as.log_u - ex.log_u));
    }
    const double r1 = errs[0] / errs[1], r2 = errs[1] / errs[2];
    *d = fmt("errors %.4f / %.4f / %.4f, step ratios %.2f, %.2f (need >= 1.3)",
             errs[0], errs[1], errs[2], r1, r2);
    return r1 >= 1.3 && r2 >= 1.3;
  });

  // 5. Free-energy n^{1/4} coefficient and subharmonic control.
  run(5, true, [&](std::string* d) {
    const cg::ScanResult scan =
        cg::remainder_scan(fx.pot, {250, 500, 1000, 2000, 4000});
    const double target = 0.5 * fx.crit.kappa * c1;
    const double rel = std::fabs(scan.a / target - 1.0);
    const cg::ScanResult control = cg::remainder_scan(
        PolyLogPotential::quadratic(1.0), {250, 500, 1000, 2000});
    *d = fmt("A = %.4f vs (kappa/2) C_1 = %.4f (off %.1f%%), control A = %.2g",
             scan.a, target, 100.0 * rel, control.a);
    return rel <= 0.10 && std::fabs(control.a) <= 0.05;
  });

  // 6. Double-scaling limit of the windowed kernel.
  run(6, true, [&](std::string* d) {
    const std::vector<complex<double>> grid = {
        {0, 0}, {1, 0}, {-1, 0}, {1, 1}, {-1, 2}};
    bool decreasing = true;
    double rel0 = 0.0;
    for (const auto& xi : grid) {
      double e_small = cg::double_scaling_error(
          fx.pot, fx.droplet, fx.crit, fx.table(1000), 1000, xi, xi, 2.0);
      double ks = 0.0;
      double e_big = cg::double_scaling_error(fx.pot, fx.droplet, fx.crit,
                                              fx.table(10000), 10000, xi, xi,
                                              2.0, nullptr, &ks);
      decreasing = decreasing && e_big < e_small;
      if (xi == complex<double>(0, 0)) rel0 = e_big / ks;
    }
    *d = fmt("errors decrease at all 5 grid points: %s; rel err at xi=0, "
             "n=1e4: %.1f%% (budget 15%%)",
             decreasing ? "yes" : "no", 100.0 * rel0);
    return decreasing && rel0 <= 0.15;
  });

  // 7. Window truncation error on the critical ring.
  run(7, true, [&](std::string* d) {
    const long n = 4000;
    const auto& tab = fx.table(n);
    double worst = 0.0;
    for (double phi : {0.0, 0.3, 2.0}) {
      const complex<double> z1 = std::polar(fx.crit.r_star, phi);
      const complex<double> z2(fx.crit.r_star, 0.0);
      const cg::KernelValue full = cg::kernel_full(fx.pot, tab, n, z1, z2);
      const cg::KernelValue win = cg::kernel_windowed(
          fx.pot, fx.droplet, fx.crit, tab, n, z1, z2, 2.0);
      worst = std::max(worst,
                       std::fabs(win.modulus - full.modulus) / full.modulus);
    }
    *d = fmt("max on-ring relative difference %.3g (budget 1e-6)", worst);
    return worst <= 1e-6;
  });

  // 8. Mean level spacing: n^{-1/4} scaling, rho(0) formula, Monte Carlo.
  run(8, true, [&](std::string* d) {
    const cg::SpacingResult s500 = cg::mean_level_spacing(
        fx.pot, fx.droplet, fx.crit, fx.table(500), 500);
    const cg::SpacingResult s4000 = cg::mean_level_spacing(
        fx.pot, fx.droplet, fx.crit, fx.table(4000), 4000);
    const cg::SpacingResult s8000 = cg::mean_level_spacing(
        fx.pot, fx.droplet, fx.crit, fx.table(8000), 8000);
    const double ratio = s8000.measured / s500.measured;
    const bool scaling_ok = std::fabs(ratio - 0.5) <= 0.05;
    const double rho0_rel =
        std::fabs(s4000.predicted_rho0 / s4000.measured - 1.0);
    const bool rho0_ok = rho0_rel <= 0.15;
    const cg::LayerSampler sampler(fx.pot, 500);
    const cg::SpacingMc mc =
        cg::spacing_mc(sampler, fx.crit.r_star, 2000, 2026);
    const double dev = std::fabs(mc.s_hat - s500.measured) / mc.stderr_s;
    const bool mc_ok = dev <= 3.0;
    *d = fmt("s(8000)/s(500) = %.3f (need 0.5 +- 0.05); rho(0)-formula off "
             "%.1f%% at n=4000 (budget 15%%); MC %.4f +- %.4f vs %.4f "
             "(%.1f SE, budget 3)",
             ratio, 100.0 * rho0_rel, mc.s_hat, mc.stderr_s, s500.measured,
             dev);
    return scaling_ok && rho0_ok && mc_ok;
  });

  // 9. Symmetries of the limiting objects.
  run(9, true, [&](std::string* d) {
    double worst = 0.0;
    for (double x : {0.3, 1.1, 2.4}) {
      worst = std::max(worst, std::fabs(cg::rho_star(1, {x, 0.0}) -
                                        cg::rho_star(1, {-x, 0.0})));
      worst = std::max(worst, std::fabs(cg::rho_star(1, {x, 0.7}) -
                                        cg::rho_star(1, {x, 0.0})));
    }
    for (const complex<double> xi : {complex<double>(1.2, -0.8),
                                     complex<double>(-0.4, 1.5)}) {
      // Ring reflection: |K(conj xi, 0)| = |K(-xi, 0)|; pointwise the two
      // values are complex conjugates.
      const complex<double> kc = cg::k_star(1, std::conj(xi), 0.0);
      const complex<double> km = cg::k_star(1, -xi, 0.0);
      worst = std::max(worst, std::fabs(std::abs(kc) - std::abs(km)));
      worst = std::max(worst, std::abs(km - std::conj(kc)));
      const complex<double> a = cg::k_star(1, xi, 2.0 * xi);
      const complex<double> b = cg::k_star(1, 2.0 * xi, xi);
      worst = std::max(worst, std::abs(a - std::conj(b)));
    }
    for (double x : {0.5, 1.5})
      for (double y : {-0.7, 0.9}) {
        const double h = cg::homogeneous_exponent(1, y, x);
        const double direct =
            std::pow(x, 4) * cg::p_poly(1, y / x - 1.0);
        worst = std::max(worst, std::fabs(h - direct));
      }
    *d = fmt("largest symmetry defect %.3g (budget 1e-8)", worst);
    return worst <= 1e-8;
  });

  // 10. m = 2 profile fixture (experimental).
  run(10, false, [&](std::string* d) {
    const PolyLogPotential pot2 = PolyLogPotential::from_laplacian_profile(
        {{5, 1.0}, {4, -3.0}, {3, 2.0}, {2, 2.0}, {1, -3.0}, {0, 1.0}}, 0.0,
        0.0);
    const cg::ScanResult scan =
        cg::remainder_scan(pot2, {250, 500, 1000, 2000, 4000});
    const size_t last = scan.rows.size() - 1;
    const double s_prev = scan.rows[last - 1].scaled_remainder;
    const double s_last = scan.rows[last].scaled_remainder;
    const double drift = std::fabs(s_last / s_prev - 1.0);
    const double r3 = cg::rho_star(2, {3.0, 0.0}) / (std::pow(3.0, 4) / 24.0);
    const double r6 = cg::rho_star(2, {6.0, 0.0}) / (std::pow(6.0, 4) / 24.0);
    const bool trend = std::fabs(r6 - 1.0) < std::fabs(r3 - 1.0);
    *d = fmt("exponent %.4f; scaled remainder %.4f -> %.4f (drift %.1f%%, "
             "budget 20%%); rho2/(xi^4/24) = %.3f at 3, %.3f at 6 (%s 1)",
             scan.exponent, s_prev, s_last, 100.0 * drift,
             r3, r6, trend ? "approaching" : "not approaching");
    return drift < 0.20 && trend;
  });

  if (g_failures > 0)
    std::printf("%d blocking criterion(s) failed\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}
