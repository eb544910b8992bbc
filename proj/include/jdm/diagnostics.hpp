#ifndef JDM_DIAGNOSTICS_HPP
#define JDM_DIAGNOSTICS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "jdm/config_mcmc.hpp"
#include "jdm/jdm.hpp"
#include "jdm/rational.hpp"

namespace jdm {

// 0/1 occupancy indicators for one potential edge, one value per retained
// chain state; `gap` records the chain steps between consecutive values.
struct EdgeTimeSeries {
  Edge edge;
  std::vector<std::uint8_t> samples;
  long long gap = 1;
};

// Evenly spaced lags start, start+step, ..., end (inclusive when aligned).
struct LagGrid {
  long long start = 1;
  long long step = 1;
  long long end = 1;

  std::vector<long long> lags() const;
};

struct AutocorrSeries {
  std::vector<long long> lags;
  std::vector<double> rho;
  double c0 = 0.0;
};

double sample_mean(const std::vector<std::uint8_t>& x);
double sample_mean(const std::vector<double>& x);

// C-hat(t) = 1/(n-t) * sum_{i<=n-t} (x_i - mean)(x_{i+t} - mean).
double autocorr_unnormalized(const std::vector<std::uint8_t>& x, long long t);
double autocorr_unnormalized(const std::vector<double>& x, long long t);

// rho-hat(t) = C-hat(t)/C-hat(0); throws ZeroVariance on constant series.
double autocorr_normalized(const std::vector<std::uint8_t>& x, long long t);
double autocorr_normalized(const std::vector<double>& x, long long t);

AutocorrSeries autocorr_series(const std::vector<std::uint8_t>& x, const LagGrid& grid);
AutocorrSeries autocorr_series(const std::vector<double>& x, const LagGrid& grid);

// tau-int estimate with a rectangular cutoff over the grid: half the
// symmetric +-t sum, i.e. 0.5 + step * sum of rho over positive grid lags.
double integrated_autocorr(const std::vector<std::uint8_t>& x, const LagGrid& grid);
double integrated_autocorr(const std::vector<double>& x, const LagGrid& grid);

// Smallest measured lag whose rho falls below `threshold`; nullopt if none.
std::optional<long long> threshold_crossing_time(const AutocorrSeries& acf,
                                                 double threshold);

// A concrete potential edge slot with its degree pair and exact mean.
struct ProbeEdge {
  int k, l;
  int u, v;  // canonical-layout vertex pair
  Rational mu;
};

// Up to `count` potential edges with mu in [0.4, 0.6]; padded with maximal-mu
// edges when too few exist.
std::vector<ProbeEdge> select_probe_edges(const JointDegreeMatrix& j, int count);

// Per-step indicator series for the given probe edges along one chain run.
std::vector<EdgeTimeSeries> run_indicator_chain(const JointDegreeMatrix& j,
                                                ChainKind kind, long long steps,
                                                const std::vector<ProbeEdge>& probes,
                                                std::uint64_t seed,
                                                long long burn_in = 0);

struct TvdPoint {
  long long gap;
  double tvd_min, tvd_median, tvd_max;
};

// For each gap, per-replica normalized total variational distance between
// per-slot sample means and the exact means: sum_e |S_e - mu_e| / sum_e mu_e.
std::vector<TvdPoint> tvd_convergence(const JointDegreeMatrix& j, ChainKind kind,
                                      const std::vector<long long>& gaps,
                                      long long samples_per_gap, int replicas,
                                      std::uint64_t seed, int threads = 0);

}  // namespace jdm

#endif
