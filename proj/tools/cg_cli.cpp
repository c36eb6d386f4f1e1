// Command-line front end for the Coulomb-gas library. Talks to the core
// exclusively through the C API in coulombgas.h.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "coulombgas.h"

namespace {

using ordered_json = nlohmann::ordered_json;

struct Fail {
  int code;         // process exit code: 2 config, 3 numeric
  std::string msg;
};

void check(cg_status st) {
  if (st != CG_OK) throw Fail{int(st), cg_last_error()};
}

[[noreturn]] void config_fail(const std::string& msg) {
  throw Fail{2, msg};
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(trim(item));
  return out;
}

double parse_double(const std::string& s) {
  try {
    size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size()) config_fail("malformed number: " + s);
    return v;
  } catch (const std::logic_error&) {
    config_fail("malformed number: " + s);
  }
}

long parse_long(const std::string& s) {
  try {
    size_t pos = 0;
    long v = std::stol(s, &pos);
    if (pos != s.size()) config_fail("malformed integer: " + s);
    return v;
  } catch (const std::logic_error&) {
    config_fail("malformed integer: " + s);
  }
}

// Complex literals in the form a+bi: "1", "-2i", "1.5-0.5i", "1e-3+2e-3i".
void parse_complex(const std::string& raw, double* re, double* im) {
  std::string s = trim(raw);
  if (s.empty()) config_fail("empty complex literal");
  if (s.back() != 'i') {
    *re = parse_double(s);
    *im = 0.0;
    return;
  }
  s.pop_back();
  size_t cut = std::string::npos;
  for (size_t k = 1; k < s.size(); ++k) {
    char ch = s[k];
    if ((ch == '+' || ch == '-') && s[k - 1] != 'e' && s[k - 1] != 'E')
      cut = k;  // keep the last sign: that is the imaginary part
  }
  if (cut == std::string::npos) {
    *re = 0.0;
    *im = (s.empty() || s == "+") ? 1.0 : (s == "-") ? -1.0 : parse_double(s);
    return;
  }
  *re = parse_double(s.substr(0, cut));
  std::string tail = s.substr(cut);
  *im = (tail == "+") ? 1.0 : (tail == "-") ? -1.0 : parse_double(tail);
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt_complex(double re, double im) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.17g%+.17gi", re, im);
  return buf;
}

// ---- potential construction --------------------------------------------

struct PotOpts {
  std::string family = "cubic";
  double t = 1.7320508075688772;  // sqrt(3): ring-critical with c = 1
  double c = 1.0;
  double a = 1.0;
  std::string powers;             // profile-poly: comma list of exponents
  std::string coeffs;             // profile-poly: comma list of coefficients
  std::string profile_file;       // profile-grid: CSV of r,w rows
  double inner_radius = 0.0;
  double base_slope = 0.0;
};

void add_potential_options(CLI::App* sub, PotOpts& p) {
  sub->add_option("--potential", p.family, "potential family")
      ->check(CLI::IsMember(
          {"cubic", "quadratic", "profile-poly", "profile-grid"}));
  sub->add_option("--t", p.t, "cubic: coefficient t in r^3/3 - t r^2/2 + c r");
  sub->add_option("--c", p.c, "cubic: coefficient c");
  sub->add_option("--a", p.a, "quadratic: q(r) = r^2 / a");
  sub->add_option("--powers", p.powers, "profile-poly: exponents of w(r)");
  sub->add_option("--coeffs", p.coeffs, "profile-poly: coefficients of w(r)");
  sub->add_option("--profile-file", p.profile_file,
                  "profile-grid: CSV file with r,w rows");
  sub->add_option("--inner-radius", p.inner_radius,
                  "profile potentials: inner radius a");
  sub->add_option("--base-slope", p.base_slope,
                  "profile potentials: slope q'(a)");
}

using PotPtr = std::unique_ptr<cg_potential, void (*)(cg_potential*)>;

PotPtr make_potential(const PotOpts& p) {
  cg_potential* pot = nullptr;
  if (p.family == "cubic") {
    check(cg_potential_cubic(p.t, p.c, &pot));
  } else if (p.family == "quadratic") {
    check(cg_potential_quadratic(p.a, &pot));
  } else if (p.family == "profile-poly") {
    std::vector<int> pw;
    std::vector<double> cf;
    for (const auto& s : split(p.powers, ',')) pw.push_back(int(parse_long(s)));
    for (const auto& s : split(p.coeffs, ',')) cf.push_back(parse_double(s));
    if (pw.empty() || pw.size() != cf.size())
      config_fail("profile-poly needs matching --powers and --coeffs lists");
    check(cg_potential_profile_poly(pw.data(), cf.data(), int(pw.size()),
                                    p.inner_radius, p.base_slope, &pot));
  } else if (p.family == "profile-grid") {
    std::ifstream in(p.profile_file);
    if (!in) config_fail("cannot open profile file: " + p.profile_file);
    std::vector<double> r, w;
    std::string line;
    while (std::getline(in, line)) {
      line = trim(line);
      if (line.empty() || line[0] == '#') continue;
      auto cols = split(line, ',');
      if (cols.size() < 2) config_fail("profile file rows must be r,w");
      r.push_back(parse_double(cols[0]));
      w.push_back(parse_double(cols[1]));
    }
    check(cg_potential_profile_grid(r.data(), w.data(), int(r.size()),
                                    p.inner_radius, p.base_slope, &pot));
  } else {
    config_fail("unknown potential family: " + p.family);
  }
  return PotPtr(pot, cg_potential_free);
}

using ModelPtr = std::unique_ptr<cg_model, void (*)(cg_model*)>;

ModelPtr make_model(const cg_potential* pot) {
  cg_model* m = nullptr;
  check(cg_model_build(pot, &m));
  return ModelPtr(m, cg_model_free);
}

using TablePtr = std::unique_ptr<cg_norm_table, void (*)(cg_norm_table*)>;

TablePtr make_table(const cg_potential* pot, const cg_model* model, long n,
                    int threads) {
  cg_norm_table* t = nullptr;
  check(cg_norm_table_build(pot, model, n, threads, &t));
  return TablePtr(t, cg_norm_table_free);
}

// ---- output destination --------------------------------------------------

struct Output {
  std::ofstream file;
  std::ostream* os = &std::cout;
  void open(const std::string& path) {
    if (path.empty() || path == "-") return;
    file.open(path);
    if (!file) config_fail("cannot open output file: " + path);
    os = &file;
  }
  std::ostream& stream() { return *os; }
};

// ---- config file / --set pre-pass ----------------------------------------

// Flat key=value configuration. File entries are defaults, --set entries
// override them, and explicit command-line flags override both. Keys must
// name a long option of the chosen subcommand; unknown keys are rejected.
std::vector<std::string> apply_config(const CLI::App& app,
                                      std::vector<std::string> args) {
  std::string config_path;
  std::vector<std::pair<std::string, std::string>> pairs;
  std::vector<std::string> rest;
  for (size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) config_fail("--config needs a file argument");
      config_path = args[++i];
    } else if (args[i] == "--set") {
      if (i + 1 >= args.size()) config_fail("--set needs key=value");
      size_t eq = args[i + 1].find('=');
      if (eq == std::string::npos) config_fail("--set needs key=value");
      pairs.emplace_back(trim(args[i + 1].substr(0, eq)),
                         trim(args[i + 1].substr(eq + 1)));
      ++i;
    } else {
      rest.push_back(args[i]);
    }
  }

  std::map<std::string, std::string> kv;
  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in) config_fail("cannot open config file: " + config_path);
    std::string line;
    while (std::getline(in, line)) {
      line = trim(line);
      if (line.empty() || line[0] == '#') continue;
      size_t eq = line.find('=');
      if (eq == std::string::npos)
        config_fail("config line is not key=value: " + line);
      kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
  }
  for (const auto& [k, v] : pairs) kv[k] = v;
  if (kv.empty()) return rest;

  if (rest.empty()) config_fail("a subcommand is required");
  const CLI::App* sub = nullptr;
  for (const CLI::App* s : app.get_subcommands(nullptr))
    if (s->get_name() == rest[0]) sub = s;
  if (!sub) return rest;  // let CLI11 report the bad subcommand

  for (const auto& [key, value] : kv) {
    const std::string flag = "--" + key;
    bool known = false;
    for (const CLI::Option* opt : sub->get_options())
      if (opt->check_name(flag)) known = true;
    if (!known) config_fail("unknown config key: " + key);
    bool given = false;
    for (const auto& a : rest)
      if (a == flag || a.rfind(flag + "=", 0) == 0) given = true;
    if (given) continue;  // explicit flags win
    rest.push_back(flag);
    rest.push_back(value);
  }
  return rest;
}

int default_threads() {
  const char* env = std::getenv("CG_THREADS");
  if (!env) return 0;
  try {
    return std::stoi(env);
  } catch (const std::logic_error&) {
    return 0;
  }
}

// ---- subcommand bodies ----------------------------------------------------

int run(std::vector<std::string> args) {
  CLI::App app{"Radial two-dimensional Coulomb gas at beta = 2: norms, "
               "kernels, free energy, and exact sampling"};
  app.require_subcommand(1);

  int threads = default_threads();
  std::string out_path;

  auto add_common = [&](CLI::App* sub, PotOpts& p) {
    add_potential_options(sub, p);
    sub->add_option("--threads", threads, "worker thread cap (0 = auto)");
    sub->add_option("--out", out_path, "write output to this file");
  };

  // constants
  auto* c_sub = app.add_subcommand(
      "constants", "droplet, criticality, and equilibrium constants (JSON)");
  PotOpts c_pot;
  bool c_universal = false;
  add_common(c_sub, c_pot);
  c_sub->add_flag("--universal", c_universal,
                  "also compute the universal constant C_m");

  // norms
  auto* n_sub =
      app.add_subcommand("norms", "orthogonal-polynomial norms (CSV)");
  PotOpts n_pot;
  long n_n = 0;
  std::string n_jlist, n_regime = "exact";
  add_common(n_sub, n_pot);
  n_sub->add_option("--n", n_n, "particle number")->required();
  n_sub->add_option("--j-list", n_jlist, "comma list of indices (default all)");
  n_sub->add_option("--regime", n_regime, "evaluation regime")
      ->check(CLI::IsMember({"exact", "bulk", "critical", "origin", "auto"}));

  // kernel
  auto* k_sub = app.add_subcommand("kernel", "correlation kernel value (CSV)");
  PotOpts k_pot;
  long k_n = 0;
  std::string k_z1 = "0", k_z2 = "0";
  bool k_windowed = false;
  double k_margin = 2.0;
  add_common(k_sub, k_pot);
  k_sub->add_option("--n", k_n, "particle number")->required();
  k_sub->add_option("--z1", k_z1, "first point, a+bi")->required();
  k_sub->add_option("--z2", k_z2, "second point, a+bi")->required();
  k_sub->add_flag("--windowed", k_windowed,
                  "restrict the sum to the critical index window");
  k_sub->add_option("--M", k_margin, "window margin M");

  // double-scaling
  auto* d_sub = app.add_subcommand(
      "double-scaling", "scaled kernel against the limit kernel (CSV)");
  PotOpts d_pot;
  long d_n = 0;
  std::string d_grid = "0";
  double d_margin = 2.0;
  add_common(d_sub, d_pot);
  d_sub->add_option("--n", d_n, "particle number")->required();
  d_sub->add_option("--xi-grid", d_grid, "comma list of xi values, a+bi");
  d_sub->add_option("--M", d_margin, "window margin M (0 = full kernel)");

  // rho
  auto* r_sub =
      app.add_subcommand("rho", "limiting one-point function (CSV)");
  int r_m = 1;
  std::string r_grid;
  double r_im = 0.0;
  r_sub->add_option("--m", r_m, "criticality order");
  r_sub->add_option("--re-grid", r_grid, "a:b:step grid of Re xi")->required();
  r_sub->add_option("--im", r_im, "Im xi (the density does not depend on it)");
  r_sub->add_option("--out", out_path, "write output to this file");

  // kstar
  auto* ks_sub = app.add_subcommand("kstar", "limiting kernel value (CSV)");
  int ks_m = 1;
  std::string ks_xi1 = "0", ks_xi2 = "0";
  ks_sub->add_option("--m", ks_m, "criticality order");
  ks_sub->add_option("--xi1", ks_xi1, "first point, a+bi")->required();
  ks_sub->add_option("--xi2", ks_xi2, "second point, a+bi")->required();
  ks_sub->add_option("--out", out_path, "write output to this file");

  // free-energy-scan
  auto* f_sub = app.add_subcommand(
      "free-energy-scan", "partition-function remainder scan (CSV + JSON)");
  PotOpts f_pot;
  std::string f_grid = "250,500,1000";
  add_common(f_sub, f_pot);
  f_sub->add_option("--n-grid", f_grid, "strictly increasing list of n");

  // sample
  auto* s_sub = app.add_subcommand("sample", "exact point samples (CSV)");
  PotOpts s_pot;
  long s_n = 0, s_samples = 1;
  unsigned long long s_seed = 1;
  add_common(s_sub, s_pot);
  s_sub->add_option("--n", s_n, "particle number")->required();
  s_sub->add_option("--samples", s_samples, "number of configurations");
  s_sub->add_option("--seed", s_seed, "RNG seed");

  // spacing
  auto* sp_sub = app.add_subcommand(
      "spacing", "mean level spacing at the critical ring (CSV)");
  PotOpts sp_pot;
  long sp_n = 0;
  add_common(sp_sub, sp_pot);
  sp_sub->add_option("--n", sp_n, "particle number")->required();

  // spacing-mc
  auto* sm_sub = app.add_subcommand(
      "spacing-mc", "Monte Carlo mean level spacing (JSON)");
  PotOpts sm_pot;
  long sm_n = 0, sm_samples = 200;
  unsigned long long sm_seed = 1;
  add_common(sm_sub, sm_pot);
  sm_sub->add_option("--n", sm_n, "particle number")->required();
  sm_sub->add_option("--samples", sm_samples, "number of configurations");
  sm_sub->add_option("--seed", sm_seed, "RNG seed");

  // validate
  auto* v_sub =
      app.add_subcommand("validate", "admissibility check (exit 3 on failure)");
  PotOpts v_pot;
  add_common(v_sub, v_pot);

  args = apply_config(app, std::move(args));
  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    throw Fail{code == 0 ? 0 : 2, ""};
  }

  Output out;
  out.open(out_path);
  std::ostream& os = out.stream();

  if (*c_sub) {
    auto pot = make_potential(c_pot);
    auto model = make_model(pot.get());
    cg_model_info info{};
    check(cg_model_get(model.get(), &info));
    ordered_json j;
    j["r0"] = info.r0;
    j["r1"] = info.r1;
    j["disk"] = info.disk != 0;
    j["critical"] = info.critical != 0;
    j["r_star"] = info.r_star;
    j["tau_star"] = info.tau_star;
    j["m"] = info.m;
    j["gamma"] = info.gamma;
    j["kappa"] = info.kappa;
    j["I_Q"] = info.i_q;
    j["E_Q"] = info.e_q;
    if (c_universal) {
      int m = info.critical ? info.m : 1;
      double cm = 0.0;
      check(cg_universal_constant(m, &cm));
      j["C_" + std::to_string(m)] = cm;
    }
    os << j.dump(2) << "\n";
    return 0;
  }

  if (*n_sub) {
    auto pot = make_potential(n_pot);
    auto model = make_model(pot.get());
    static const std::map<std::string, int> kRegime = {
        {"exact", 0}, {"bulk", 1}, {"critical", 2}, {"origin", 3}, {"auto", 4}};
    static const char* kRegimeName[] = {"exact", "bulk", "critical", "origin"};
    std::vector<long> js;
    if (n_jlist.empty()) {
      for (long j = 0; j < n_n; ++j) js.push_back(j);
    } else {
      for (const auto& s : split(n_jlist, ',')) js.push_back(parse_long(s));
    }
    os << "j,log_u,regime,r_tau,x,err_est\n";
    for (long j : js) {
      double log_u = 0, r_tau = 0, x = 0, err = 0;
      int used = 0;
      check(cg_log_norm(pot.get(), model.get(), j, n_n, kRegime.at(n_regime),
                        &log_u, &r_tau, &x, &err, &used));
      os << j << ',' << fmt(log_u) << ',' << kRegimeName[used] << ','
         << fmt(r_tau) << ',' << fmt(x) << ',' << fmt(err) << "\n";
    }
    return 0;
  }

  if (*k_sub) {
    auto pot = make_potential(k_pot);
    auto model = make_model(pot.get());
    auto table = make_table(pot.get(), model.get(), k_n, threads);
    double re1, im1, re2, im2;
    parse_complex(k_z1, &re1, &im1);
    parse_complex(k_z2, &re2, &im2);
    double modulus = 0, phase = 0;
    check(cg_kernel(pot.get(), model.get(), table.get(), re1, im1, re2, im2,
                    k_windowed ? 1 : 0, k_margin, &modulus, &phase));
    os << "n,z1,z2,windowed,M,modulus,phase\n";
    os << k_n << ',' << fmt_complex(re1, im1) << ',' << fmt_complex(re2, im2)
       << ',' << (k_windowed ? 1 : 0) << ',' << fmt(k_margin) << ','
       << fmt(modulus) << ',' << fmt(phase) << "\n";
    return 0;
  }

  if (*d_sub) {
    auto pot = make_potential(d_pot);
    auto model = make_model(pot.get());
    auto table = make_table(pot.get(), model.get(), d_n, threads);
    os << "n,xi,kn_scaled,kstar_scaled,error\n";
    for (const auto& s : split(d_grid, ',')) {
      double re, im;
      parse_complex(s, &re, &im);
      double err = 0, kn = 0, ks = 0;
      check(cg_double_scaling_error(pot.get(), model.get(), table.get(), re,
                                    im, re, im, d_margin, &err, &kn, &ks));
      os << d_n << ',' << fmt_complex(re, im) << ',' << fmt(kn) << ','
         << fmt(ks) << ',' << fmt(err) << "\n";
    }
    return 0;
  }

  if (*r_sub) {
    auto cols = split(r_grid, ':');
    if (cols.size() != 3) config_fail("--re-grid must be a:b:step");
    double a = parse_double(cols[0]);
    double b = parse_double(cols[1]);
    double step = parse_double(cols[2]);
    if (step <= 0 || b < a) config_fail("--re-grid must satisfy a <= b, step > 0");
    os << "m,re,im,rho\n";
    for (long k = 0;; ++k) {
      double re = a + double(k) * step;
      if (re > b + 1e-12 * (1 + std::abs(b))) break;
      double v = 0;
      check(cg_rho(r_m, re, &v));
      os << r_m << ',' << fmt(re) << ',' << fmt(r_im) << ',' << fmt(v) << "\n";
    }
    return 0;
  }

  if (*ks_sub) {
    double re1, im1, re2, im2;
    parse_complex(ks_xi1, &re1, &im1);
    parse_complex(ks_xi2, &re2, &im2);
    double vre = 0, vim = 0;
    check(cg_kstar(ks_m, re1, im1, re2, im2, &vre, &vim));
    os << "m,xi1,xi2,value,modulus,err_est\n";
    os << ks_m << ',' << fmt_complex(re1, im1) << ',' << fmt_complex(re2, im2)
       << ',' << fmt_complex(vre, vim) << ',' << fmt(std::hypot(vre, vim))
       << ',' << fmt(1e-9) << "\n";
    return 0;
  }

  if (*f_sub) {
    auto pot = make_potential(f_pot);
    std::vector<long> grid;
    for (const auto& s : split(f_grid, ',')) grid.push_back(parse_long(s));
    for (size_t i = 1; i < grid.size(); ++i)
      if (grid[i] <= grid[i - 1])
        config_fail("--n-grid must be strictly increasing");
    if (grid.size() < 2) config_fail("--n-grid needs at least two points");
    std::vector<cg_scan_row> rows(grid.size());
    cg_scan_fit fit{};
    check(cg_remainder_scan(pot.get(), grid.data(), int(grid.size()), threads,
                            rows.data(), &fit));
    os << "n,logZ,term_n2,term_nlogn,term_n,term_quarter,remainder,"
          "scaled_remainder\n";
    for (const auto& r : rows) {
      os << r.n << ',' << fmt(r.log_z) << ',' << fmt(r.term_n2) << ','
         << fmt(r.term_nlogn) << ',' << fmt(r.term_n) << ','
         << fmt(r.term_quarter) << ',' << fmt(r.remainder) << ','
         << fmt(r.scaled_remainder) << "\n";
    }
    ordered_json j;
    j["A"] = fit.a;
    j["fit_model"] =
        "scaled_remainder = A + B log(n) n^-e + C n^-e, e = " +
        fmt(fit.exponent);
    j["residuals"] = fit.residual;
    j["B"] = fit.b;
    j["C"] = fit.c;
    j["A_two_term"] = fit.a_two_term;
    j["B_two_term"] = fit.b_two_term;
    j["condition"] = fit.condition;
    os << j.dump(2) << "\n";
    return 0;
  }

  if (*s_sub) {
    auto pot = make_potential(s_pot);
    cg_sampler* raw = nullptr;
    check(cg_sampler_build(pot.get(), s_n, threads, &raw));
    std::unique_ptr<cg_sampler, void (*)(cg_sampler*)> sampler(
        raw, cg_sampler_free);
    std::vector<double> re(static_cast<size_t>(s_n));
    std::vector<double> im(static_cast<size_t>(s_n));
    os << "sample_id,re,im\n";
    for (long sid = 0; sid < s_samples; ++sid) {
      check(cg_sampler_draw(sampler.get(), s_seed,
                            (unsigned long long)(sid), re.data(), im.data()));
      for (long j = 0; j < s_n; ++j)
        os << sid << ',' << fmt(re[size_t(j)]) << ',' << fmt(im[size_t(j)])
           << "\n";
    }
    return 0;
  }

  if (*sp_sub) {
    auto pot = make_potential(sp_pot);
    auto model = make_model(pot.get());
    auto table = make_table(pot.get(), model.get(), sp_n, threads);
    double measured = 0, rho0 = 0, profile = 0;
    check(cg_mean_level_spacing(pot.get(), model.get(), table.get(), &measured,
                                &rho0, &profile));
    os << "n,measured,predicted_rho0,predicted_profile\n";
    os << sp_n << ',' << fmt(measured) << ',' << fmt(rho0) << ','
       << fmt(profile) << "\n";
    return 0;
  }

  if (*sm_sub) {
    auto pot = make_potential(sm_pot);
    auto model = make_model(pot.get());
    cg_model_info info{};
    check(cg_model_get(model.get(), &info));
    if (!info.critical) config_fail("spacing-mc needs a critical potential");
    cg_sampler* raw = nullptr;
    check(cg_sampler_build(pot.get(), sm_n, threads, &raw));
    std::unique_ptr<cg_sampler, void (*)(cg_sampler*)> sampler(
        raw, cg_sampler_free);
    double s_hat = 0, se = 0;
    check(cg_spacing_mc(sampler.get(), info.r_star, sm_samples, sm_seed,
                        threads, &s_hat, &se));
    ordered_json j;
    j["s_hat"] = s_hat;
    j["stderr"] = se;
    j["n"] = sm_n;
    j["samples"] = sm_samples;
    os << j.dump(2) << "\n";
    return 0;
  }

  if (*v_sub) {
    auto pot = make_potential(v_pot);
    int admissible = 0;
    char detail[512] = {0};
    check(cg_validate(pot.get(), &admissible, detail, sizeof detail));
    ordered_json j;
    j["admissible"] = admissible != 0;
    j["detail"] = std::string(detail);
    os << j.dump(2) << "\n";
    return admissible ? 0 : 3;
  }

  config_fail("no subcommand selected");
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    return run(std::move(args));
  } catch (const Fail& f) {
    if (!f.msg.empty()) std::cerr << "error: " << f.msg << "\n";
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
