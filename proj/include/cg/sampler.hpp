#ifndef CG_SAMPLER_HPP
#define CG_SAMPLER_HPP

#include <complex>
#include <cstdint>
#include <vector>

#include "cg/norms.hpp"
#include "cg/potential.hpp"
#include "cg/spline.hpp"

namespace cg {

struct PointConfiguration {
  long n = 0;
  std::uint64_t seed = 0;
  std::uint64_t sample_id = 0;
  std::vector<std::complex<double>> points;
};

// Exact sampler for the beta = 2 radial ensemble: the moduli are
// independent draws, layer j from density r^{2j+1} e^{-n q(r)} / u_j,
// angles uniform. Layer inverse-CDF tables are built once.
class LayerSampler {
 public:
  LayerSampler(const RadialPotential& pot, long n,
               const QuadratureSpec& spec = {}, int threads = 0);

  long n() const { return n_; }

  double cdf(long j, double r) const;
  // Radius with CDF value u, accurate to 1e-10 in CDF.
  double inverse_cdf(long j, double u) const;

  PointConfiguration sample(std::uint64_t seed,
                            std::uint64_t sample_id = 0) const;
  std::vector<PointConfiguration> sample_many(std::uint64_t seed, long count,
                                              int threads = 0) const;

 private:
  struct Layer {
    CubicSpline cdf;
    double lo = 0.0, hi = 0.0;
  };
  void build_layer(const RadialPotential& pot, const Droplet& droplet,
                   long j, int resolution);
  long n_ = 0;
  std::vector<Layer> layers_;
};

struct CountStats {
  double mean = 0.0;
  double stderr_mean = 0.0;
  long samples = 0;
};

CountStats count_in_disk_stats(const LayerSampler& sampler,
                               std::complex<double> center, double radius,
                               long n_samples, std::uint64_t seed,
                               int threads = 0);

struct HistogramBin {
  double lo = 0.0, hi = 0.0;
  double count = 0.0;       // mean count per configuration
  double density = 0.0;     // points per unit area, comparable to K_n/pi
  double poisson_err = 0.0;
};

std::vector<HistogramBin> radial_histogram(
    const std::vector<PointConfiguration>& configs,
    const std::vector<double>& edges);

struct SpacingMc {
  double s_hat = 0.0;
  double stderr_s = 0.0;
  long samples = 0;
};

// Empirical mean level spacing: root of the interpolated empirical count
// around the given center.
SpacingMc spacing_mc(const LayerSampler& sampler, double center,
                     long n_samples, std::uint64_t seed, int threads = 0);

}  // namespace cg

#endif
