#include "cg/sampler.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <thread>

#include "cg/errors.hpp"
#include "cg/quadrature.hpp"
#include "cg/rng.hpp"

namespace cg {

namespace {

int worker_count(int threads, long jobs) {
  int nw = threads > 0 ? threads
                       : int(std::thread::hardware_concurrency());
  nw = std::max(1, std::min<int>(nw, 64));
  return int(std::min<long>(nw, jobs));
}

template <typename Fn>
void parallel_for(long count, int threads, Fn&& body) {
  const int nw = worker_count(threads, count);
  if (nw <= 1) {
    for (long i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<long> next{0};
  std::exception_ptr err;
  std::mutex err_mu;
  auto work = [&] {
    try {
      for (;;) {
        const long i = next.fetch_add(1);
        if (i >= count) break;
        body(i);
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(err_mu);
      if (!err) err = std::current_exception();
      next.store(count);
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(size_t(nw));
  for (int t = 0; t < nw; ++t) pool.emplace_back(work);
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
}

}  // namespace

void LayerSampler::build_layer(const RadialPotential& pot,
                               const Droplet& droplet, long j,
                               int resolution) {
  const double tau = double(j) / double(n_);
  const double r_tau = r_of_tau(pot, droplet, tau);
  const double v0 = r_tau > 0.0
                        ? pot.value(r_tau) - 2.0 * tau * std::log(r_tau)
                        : pot.value(0.0);
  auto g = [&](double r) {
    if (r <= 0.0) return 0.0;
    const double ex = -double(n_) * (pot.value(r) -
                                     2.0 * tau * std::log(r) - v0) +
                      std::log(r);
    return ex < -745.0 ? 0.0 : std::exp(ex);
  };
  // Same window construction as the exact norm: extend until the shifted
  // integrand is ~1e-16 of its peak (CDF tails below table resolution).
  const double peak = r_tau;
  double g_peak = peak > 0.0 ? g(peak) : 0.0;
  for (int i = 1; i <= 64; ++i) {
    // Coarse scan guards layers whose density peaks away from r_tau
    // (notably j = 0 on a disk, where the peak sits near the origin).
    const double r = droplet.r1 * std::pow(10.0, -6.0 * (1.0 - double(i) / 64.0));
    g_peak = std::max(g_peak, g(r));
  }
  const double floor = 1e-16 * g_peak;
  double h0 = 0.5 * std::log(double(n_) + 1.0) /
              (std::pow(double(n_), 0.25) + std::sqrt(double(n_)));
  h0 = std::max(h0, 1e-4 * droplet.r1);
  double hi = std::max(peak, 1e-3 * droplet.r1) + h0;
  int guard = 0;
  while (g(hi) > floor) {
    hi += h0 * std::pow(2.0, double(guard));
    if (++guard > 200) fail(ErrorCode::numeric, "sampler: window search");
  }
  double lo = 0.0;
  if (tau > 0.0 && peak > 0.0) {
    lo = peak;
    guard = 0;
    while (lo > 0.0 && g(lo) > floor) {
      lo = std::max(0.0, lo - h0 * std::pow(2.0, double(guard)));
      if (++guard > 200) break;
    }
  }

  for (int rounds = 0;; ++rounds) {
    const int k = resolution << rounds;
    std::vector<double> xs(size_t(k) + 1), cum(size_t(k) + 1, 0.0);
    for (int i = 0; i <= k; ++i)
      xs[size_t(i)] = lo + (hi - lo) * double(i) / double(k);
    bool monotone = true;
    for (int i = 0; i < k; ++i) {
      QuadResult q = integrate_gk(g, xs[size_t(i)], xs[size_t(i) + 1], 1e-10,
                                  1e-14 * g_peak);
      if (q.value < 0.0) monotone = false;
      cum[size_t(i) + 1] = cum[size_t(i)] + std::max(q.value, 0.0);
    }
    const double total = cum.back();
    if (total <= 0.0) fail(ErrorCode::numeric, "sampler: empty layer mass");
    for (auto& c : cum) c /= total;
    CubicSpline spline = CubicSpline::pchip(xs, cum);
    // The spline must be increasing everywhere we will invert it.
    for (int i = 0; i <= 4 * k && monotone; ++i) {
      const double r = lo + (hi - lo) * double(i) / double(4 * k);
      if (spline.eval(r, 1) < -1e-12) monotone = false;
    }
    if (monotone || rounds >= 3) {
      if (!monotone)
        fail(ErrorCode::numeric, "sampler: non-monotone CDF after refinement");
      Layer& layer = layers_[size_t(j)];
      layer.cdf = std::move(spline);
      layer.lo = lo;
      layer.hi = hi;
      return;
    }
  }
}

LayerSampler::LayerSampler(const RadialPotential& pot, long n,
                           const QuadratureSpec& spec, int threads)
    : n_(n), layers_(size_t(n)) {
  if (n < 1) fail(ErrorCode::config, "LayerSampler: n < 1");
  (void)spec;
  Droplet droplet = find_droplet(pot);
  parallel_for(n, threads,
               [&](long j) { build_layer(pot, droplet, j, 256); });
}

double LayerSampler::cdf(long j, double r) const {
  if (j < 0 || j >= n_) fail(ErrorCode::config, "cdf: layer index");
  const Layer& l = layers_[size_t(j)];
  if (r <= l.lo) return 0.0;
  if (r >= l.hi) return 1.0;
  return std::clamp(l.cdf(r), 0.0, 1.0);
}

double LayerSampler::inverse_cdf(long j, double u) const {
  if (j < 0 || j >= n_) fail(ErrorCode::config, "inverse_cdf: layer index");
  if (u < 0.0 || u >= 1.0) fail(ErrorCode::domain, "inverse_cdf: u range");
  const Layer& l = layers_[size_t(j)];
  if (u == 0.0) return l.lo;
  return brent_root([&](double r) { return l.cdf(r) - u; }, l.lo, l.hi,
                    1e-14 * std::max(l.hi, 1.0));
}

PointConfiguration LayerSampler::sample(std::uint64_t seed,
                                        std::uint64_t sample_id) const {
  PointConfiguration cfg;
  cfg.n = n_;
  cfg.seed = seed;
  cfg.sample_id = sample_id;
  cfg.points.resize(size_t(n_));
  for (long j = 0; j < n_; ++j) {
    double u = counter_uniform(seed, sample_id, std::uint64_t(j), 0);
    if (u >= 1.0) u = std::nextafter(1.0, 0.0);
    const double r = inverse_cdf(j, u);
    const double theta =
        2.0 * M_PI * counter_uniform(seed, sample_id, std::uint64_t(j), 1);
    cfg.points[size_t(j)] =
        std::complex<double>(r * std::cos(theta), r * std::sin(theta));
  }
  return cfg;
}

std::vector<PointConfiguration> LayerSampler::sample_many(std::uint64_t seed,
                                                          long count,
                                                          int threads) const {
  std::vector<PointConfiguration> out(static_cast<size_t>(count));
  parallel_for(count, threads, [&](long i) {
    out[size_t(i)] = sample(seed, std::uint64_t(i));
  });
  return out;
}

CountStats count_in_disk_stats(const LayerSampler& sampler,
                               std::complex<double> center, double radius,
                               long n_samples, std::uint64_t seed,
                               int threads) {
  if (n_samples < 1) fail(ErrorCode::config, "count_in_disk_stats: samples");
  std::vector<double> counts(size_t(n_samples), 0.0);
  parallel_for(n_samples, threads, [&](long i) {
    PointConfiguration cfg = sampler.sample(seed, std::uint64_t(i));
    long c = 0;
    for (const auto& z : cfg.points)
      if (std::abs(z - center) < radius) ++c;
    counts[size_t(i)] = double(c);
  });
  CountStats st;
  st.samples = n_samples;
  double sum = 0.0;
  for (double c : counts) sum += c;
  st.mean = sum / double(n_samples);
  double ss = 0.0;
  for (double c : counts) ss += (c - st.mean) * (c - st.mean);
  st.stderr_mean = n_samples > 1
                       ? std::sqrt(ss / double(n_samples - 1) /
                                   double(n_samples))
                       : 0.0;
  return st;
}

std::vector<HistogramBin> radial_histogram(
    const std::vector<PointConfiguration>& configs,
    const std::vector<double>& edges) {
  if (configs.empty()) fail(ErrorCode::config, "radial_histogram: no configs");
  if (edges.size() < 2) fail(ErrorCode::config, "radial_histogram: edges");
  for (size_t i = 0; i < edges.size(); ++i) {
    if (edges[i] < 0.0)
      fail(ErrorCode::config, "radial_histogram: negative radius bin");
    if (i > 0 && edges[i] <= edges[i - 1])
      fail(ErrorCode::config, "radial_histogram: edges must increase");
  }
  const long n = configs.front().n;
  for (const auto& c : configs)
    if (c.n != n) fail(ErrorCode::config, "radial_histogram: mixed n");
  std::vector<HistogramBin> bins(edges.size() - 1);
  for (size_t b = 0; b + 1 < edges.size(); ++b) {
    bins[b].lo = edges[b];
    bins[b].hi = edges[b + 1];
  }
  std::vector<long> totals(bins.size(), 0);
  for (const auto& c : configs)
    for (const auto& z : c.points) {
      const double r = std::abs(z);
      const auto it = std::upper_bound(edges.begin(), edges.end(), r);
      if (it == edges.begin() || it == edges.end()) continue;
      ++totals[size_t(it - edges.begin()) - 1];
    }
  const double m = double(configs.size());
  for (size_t b = 0; b < bins.size(); ++b) {
    const double area =
        M_PI * (bins[b].hi * bins[b].hi - bins[b].lo * bins[b].lo);
    bins[b].count = double(totals[b]) / m;
    bins[b].density = double(totals[b]) / (m * area);
    bins[b].poisson_err = std::sqrt(double(totals[b])) / (m * area);
  }
  return bins;
}

SpacingMc spacing_mc(const LayerSampler& sampler, double center,
                     long n_samples, std::uint64_t seed, int threads) {
  if (n_samples < 100) fail(ErrorCode::config, "spacing_mc: need >= 100");
  // Collect distances to the center; the empirical expected count in a
  // disk of radius s is (#distances < s) / n_samples.
  std::vector<std::vector<double>> per_sample(static_cast<size_t>(n_samples));
  parallel_for(n_samples, threads, [&](long i) {
    PointConfiguration cfg = sampler.sample(seed, std::uint64_t(i));
    std::vector<double> d;
    for (const auto& z : cfg.points) {
      const double dist = std::abs(z - std::complex<double>(center, 0.0));
      if (dist < 0.5) d.push_back(dist);  // generous cull, spacing << 1
    }
    per_sample[size_t(i)] = std::move(d);
  });
  std::vector<double> all;
  for (auto& v : per_sample) all.insert(all.end(), v.begin(), v.end());
  if (long(all.size()) < n_samples)
    fail(ErrorCode::numeric, "spacing_mc: too few nearby points");
  std::sort(all.begin(), all.end());
  // Root of count(s) = 1: between order statistics n_samples-1 and
  // n_samples (0-based), linear in count.
  const size_t k = size_t(n_samples);
  SpacingMc out;
  out.samples = n_samples;
  out.s_hat = 0.5 * (all[k - 1] + all[k]);
  // Delta method: var(count) / slope^2, slope from a central difference
  // of the empirical count curve.
  const size_t w = std::max<size_t>(k / 10, 25);
  const double slope = (2.0 * double(w) / double(n_samples)) /
                       std::max(all[std::min(k + w, all.size() - 1)] -
                                    all[k >= w ? k - w : 0],
                                1e-300);
  // Count variance at s_hat across samples:
  double mean = 0.0;
  std::vector<double> cnt(size_t(n_samples), 0.0);
  for (size_t i = 0; i < size_t(n_samples); ++i) {
    long c = 0;
    for (double d : per_sample[i])
      if (d < out.s_hat) ++c;
    cnt[i] = double(c);
    mean += double(c);
  }
  mean /= double(n_samples);
  double ss = 0.0;
  for (double c : cnt) ss += (c - mean) * (c - mean);
  const double se_count =
      std::sqrt(ss / double(n_samples - 1) / double(n_samples));
  out.stderr_s = se_count / slope;
  return out;
}

}  // namespace cg
