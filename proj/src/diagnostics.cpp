#include "jdm/diagnostics.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <thread>
#include <unordered_map>

#include "jdm/constructor.hpp"
#include "jdm/errors.hpp"

namespace jdm {

std::vector<long long> LagGrid::lags() const {
  std::vector<long long> out;
  for (long long t = start; t <= end; t += step) out.push_back(t);
  return out;
}

namespace {

template <typename T>
double mean_impl(const std::vector<T>& x) {
  if (x.empty()) throw EmptySeries();
  double sum = 0.0;
  for (auto v : x) sum += static_cast<double>(v);
  return sum / static_cast<double>(x.size());
}

template <typename T>
std::vector<double> centered(const std::vector<T>& x) {
  double mu = mean_impl(x);
  std::vector<double> c(x.size());
  for (size_t i = 0; i < x.size(); ++i) c[i] = static_cast<double>(x[i]) - mu;
  return c;
}

double autocov(const std::vector<double>& c, long long t) {
  long long n = static_cast<long long>(c.size());
  double sum = 0.0;
  for (long long i = 0; i < n - t; ++i) sum += c[i] * c[i + t];
  return sum / static_cast<double>(n - t);
}

template <typename T>
double autocorr_unnormalized_impl(const std::vector<T>& x, long long t) {
  long long n = static_cast<long long>(x.size());
  if (t < 0 || t >= n) throw LagTooLarge(t, n);
  return autocov(centered(x), t);
}

template <typename T>
double autocorr_normalized_impl(const std::vector<T>& x, long long t) {
  long long n = static_cast<long long>(x.size());
  if (t < 0 || t >= n) throw LagTooLarge(t, n);
  auto c = centered(x);
  double c0 = autocov(c, 0);
  if (c0 <= 0.0) throw ZeroVariance();
  return autocov(c, t) / c0;
}

template <typename T>
AutocorrSeries autocorr_series_impl(const std::vector<T>& x, const LagGrid& grid) {
  long long n = static_cast<long long>(x.size());
  auto c = centered(x);
  double c0 = autocov(c, 0);
  if (c0 <= 0.0) throw ZeroVariance();
  AutocorrSeries out;
  out.c0 = c0;
  for (long long t : grid.lags()) {
    if (t < 0 || t >= n) throw LagTooLarge(t, n);
    out.lags.push_back(t);
    out.rho.push_back(autocov(c, t) / c0);
  }
  return out;
}

double integrated_autocorr_impl(const AutocorrSeries& acf, const LagGrid& grid) {
  // Half the symmetric sum over +-t: 0.5*rho(0) plus the positive-lag sum,
  // scaled by the grid interval when lags are sparse.
  double tau = 0.5;
  for (size_t i = 0; i < acf.lags.size(); ++i) {
    if (acf.lags[i] == 0) continue;
    tau += static_cast<double>(grid.step) * acf.rho[i];
  }
  return tau;
}

}  // namespace

double sample_mean(const std::vector<std::uint8_t>& x) { return mean_impl(x); }
double sample_mean(const std::vector<double>& x) { return mean_impl(x); }

double autocorr_unnormalized(const std::vector<std::uint8_t>& x, long long t) {
  return autocorr_unnormalized_impl(x, t);
}
double autocorr_unnormalized(const std::vector<double>& x, long long t) {
  return autocorr_unnormalized_impl(x, t);
}

double autocorr_normalized(const std::vector<std::uint8_t>& x, long long t) {
  return autocorr_normalized_impl(x, t);
}
double autocorr_normalized(const std::vector<double>& x, long long t) {
  return autocorr_normalized_impl(x, t);
}

AutocorrSeries autocorr_series(const std::vector<std::uint8_t>& x, const LagGrid& grid) {
  return autocorr_series_impl(x, grid);
}
AutocorrSeries autocorr_series(const std::vector<double>& x, const LagGrid& grid) {
  return autocorr_series_impl(x, grid);
}

double integrated_autocorr(const std::vector<std::uint8_t>& x, const LagGrid& grid) {
  return integrated_autocorr_impl(autocorr_series(x, grid), grid);
}
double integrated_autocorr(const std::vector<double>& x, const LagGrid& grid) {
  return integrated_autocorr_impl(autocorr_series(x, grid), grid);
}

std::optional<long long> threshold_crossing_time(const AutocorrSeries& acf,
                                                 double threshold) {
  for (size_t i = 0; i < acf.lags.size(); ++i)
    if (acf.rho[i] < threshold) return acf.lags[i];
  return std::nullopt;
}

std::vector<ProbeEdge> select_probe_edges(const JointDegreeMatrix& j, int count) {
  auto report = is_graphical(j);
  if (!report.graphical) throw NotGraphical();
  DegreeVector d = derive_degree_vector(j);
  CanonicalLayout layout = CanonicalLayout::from(d);

  struct PairMu {
    std::pair<int, int> kl;
    Rational mu;
  };
  std::vector<PairMu> in_range, fallback;
  for (auto& [kl, c] : j.entries) {
    Rational mu = Rational::of(c, slot_count(d, kl.first, kl.second));
    bool in = 5 * mu.num >= 2 * mu.den && 5 * mu.num <= 3 * mu.den;  // [0.4, 0.6]
    (in ? in_range : fallback).push_back({kl, mu});
  }
  std::sort(in_range.begin(), in_range.end(), [](const PairMu& a, const PairMu& b) {
    double da = std::abs(a.mu.value() - 0.5), db = std::abs(b.mu.value() - 0.5);
    if (da != db) return da < db;
    return a.kl < b.kl;
  });
  std::sort(fallback.begin(), fallback.end(), [](const PairMu& a, const PairMu& b) {
    if (!(a.mu == b.mu))
      return a.mu.num * b.mu.den > b.mu.num * a.mu.den;  // mu descending
    return a.kl < b.kl;
  });

  std::vector<ProbeEdge> probes;
  auto emit_slots = [&](const PairMu& pm) {
    auto [k, l] = pm.kl;
    auto ks = layout.class_vertices(k);
    if (k == l) {
      for (size_t a = 0; a < ks.size() && (int)probes.size() < count; ++a)
        for (size_t b = a + 1; b < ks.size() && (int)probes.size() < count; ++b)
          probes.push_back({k, l, ks[a], ks[b], pm.mu});
    } else {
      auto ls = layout.class_vertices(l);
      for (int u : ks)
        for (int v : ls) {
          if ((int)probes.size() >= count) return;
          probes.push_back({k, l, std::min(u, v), std::max(u, v), pm.mu});
        }
    }
  };
  for (auto& pm : in_range) {
    if ((int)probes.size() >= count) break;
    emit_slots(pm);
  }
  for (auto& pm : fallback) {
    if ((int)probes.size() >= count) break;
    emit_slots(pm);
  }
  return probes;
}

std::vector<EdgeTimeSeries> run_indicator_chain(const JointDegreeMatrix& j,
                                                ChainKind kind, long long steps,
                                                const std::vector<ProbeEdge>& probes,
                                                std::uint64_t seed, long long burn_in) {
  Configuration c = build_configuration(greedy_construct(j));
  Rng rng(seed);
  for (long long i = 0; i < burn_in; ++i) c.step(kind, rng);

  auto key = [](int u, int v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
  };
  std::unordered_map<std::uint64_t, int> probe_of;
  std::vector<std::uint8_t> present(probes.size());
  std::vector<EdgeTimeSeries> series(probes.size());
  for (size_t p = 0; p < probes.size(); ++p) {
    probe_of[key(probes[p].u, probes[p].v)] = static_cast<int>(p);
    present[p] = c.pair_multiplicity(probes[p].u, probes[p].v) > 0 ? 1 : 0;
    series[p].edge = {probes[p].u, probes[p].v};
    series[p].gap = 1;
    series[p].samples.reserve(static_cast<size_t>(steps));
  }

  for (long long i = 0; i < steps; ++i) {
    if (c.step(kind, rng) && c.last_swap_edges().first >= 0) {
      // Only the two rewired edges can change slot occupancy. Newly occupied
      // slots are the edges' new pairs; freed slots can only turn a
      // currently-present probe off, so re-check those.
      for (int e : {c.last_swap_edges().first, c.last_swap_edges().second}) {
        auto [u, v] = c.edge_vertices(e);
        auto it = probe_of.find(key(u, v));
        if (it != probe_of.end())
          present[it->second] = c.pair_multiplicity(u, v) > 0 ? 1 : 0;
      }
      for (size_t p = 0; p < probes.size(); ++p)
        if (present[p])
          present[p] = c.pair_multiplicity(probes[p].u, probes[p].v) > 0 ? 1 : 0;
    }
    for (size_t p = 0; p < probes.size(); ++p) series[p].samples.push_back(present[p]);
  }
  return series;
}

namespace {

// Normalized TVD of one run's per-slot sample means against exact means.
double one_run_tvd(const JointDegreeMatrix& j, const DegreeVector& d,
                   const CanonicalLayout& layout, ChainKind kind, long long gap,
                   long long samples, std::uint64_t seed) {
  std::unordered_map<std::uint64_t, long long> occupancy;
  auto key = [](int u, int v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
  };
  SamplerSchedule schedule{0, gap, samples, seed};
  sample(j, kind, schedule, [&](const Pseudograph& g) {
    for (auto [u, v] : g.edges) ++occupancy[key(u, v)];
  });

  double num = 0.0, den = 0.0;
  for (auto& [kl, c] : j.entries) {
    auto [k, l] = kl;
    double mu = Rational::of(c, slot_count(d, k, l)).value();
    auto ks = layout.class_vertices(k);
    auto emit = [&](int u, int v) {
      auto it = occupancy.find(key(u, v));
      double s = it == occupancy.end()
                     ? 0.0
                     : static_cast<double>(it->second) / static_cast<double>(samples);
      num += std::abs(s - mu);
      den += mu;
    };
    if (k == l) {
      for (size_t a = 0; a < ks.size(); ++a)
        for (size_t b = a + 1; b < ks.size(); ++b) emit(ks[a], ks[b]);
    } else {
      auto ls = layout.class_vertices(l);
      for (int u : ks)
        for (int v : ls) emit(u, v);
    }
  }
  return num / den;
}

void parallel_tasks(int threads, const std::vector<std::function<void()>>& tasks) {
  if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
  if (threads < 1) threads = 1;
  std::vector<std::thread> pool;
  std::atomic<size_t> next{0};
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (;;) {
        size_t i = next.fetch_add(1);
        if (i >= tasks.size()) return;
        tasks[i]();
      }
    });
  for (auto& th : pool) th.join();
}

}  // namespace

std::vector<TvdPoint> tvd_convergence(const JointDegreeMatrix& j, ChainKind kind,
                                      const std::vector<long long>& gaps,
                                      long long samples_per_gap, int replicas,
                                      std::uint64_t seed, int threads) {
  auto report = is_graphical(j);
  if (!report.graphical) throw NotGraphical();
  DegreeVector d = derive_degree_vector(j);
  CanonicalLayout layout = CanonicalLayout::from(d);

  std::vector<std::vector<double>> tvd(gaps.size(), std::vector<double>(replicas));
  std::vector<std::function<void()>> tasks;
  for (size_t gi = 0; gi < gaps.size(); ++gi)
    for (int r = 0; r < replicas; ++r)
      tasks.push_back([&, gi, r] {
        std::uint64_t s = derive_seed(seed, gi * static_cast<std::uint64_t>(replicas) + r);
        tvd[gi][r] = one_run_tvd(j, d, layout, kind, gaps[gi], samples_per_gap, s);
      });
  parallel_tasks(threads, tasks);

  std::vector<TvdPoint> out;
  for (size_t gi = 0; gi < gaps.size(); ++gi) {
    auto vals = tvd[gi];
    std::sort(vals.begin(), vals.end());
    TvdPoint pt;
    pt.gap = gaps[gi];
    pt.tvd_min = vals.front();
    pt.tvd_max = vals.back();
    pt.tvd_median = vals.size() % 2 == 1
                        ? vals[vals.size() / 2]
                        : 0.5 * (vals[vals.size() / 2 - 1] + vals[vals.size() / 2]);
    out.push_back(pt);
  }
  return out;
}

}  // namespace jdm
