// Command-line surface for joint degree matrix tools: graphicality checking,
// greedy construction, MCMC sampling and convergence diagnostics.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "jdm/config_mcmc.hpp"
#include "jdm/constructor.hpp"
#include "jdm/diagnostics.hpp"
#include "jdm/errors.hpp"
#include "jdm/io.hpp"
#include "jdm/oracle.hpp"
#include "jdm/synth.hpp"

namespace fs = std::filesystem;
using namespace jdm;

namespace {

constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

JointDegreeMatrix load_jdm(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path);
  return read_jdm(in);
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

void print_report(const JointDegreeMatrix& j, const GraphicalityReport& report) {
  long long m = edge_count(j);
  if (report.graphical) {
    DegreeVector d = derive_degree_vector(j);
    std::cout << "graphical\n";
    std::cout << "n " << d.vertex_count() << "\n";
    std::cout << "m " << m << "\n";
    std::cout << "erdos_gallai " << (erdos_gallai_check(d) ? "pass" : "fail") << "\n";
  } else {
    std::cout << "not graphical\n";
    std::cout << "m " << m << "\n";
    bool have_dv = true;
    DegreeVector d;
    try {
      d = derive_degree_vector(j);
    } catch (const NonIntegerDegreeCount&) {
      have_dv = false;
    }
    if (have_dv) {
      std::cout << "n " << d.vertex_count() << "\n";
      std::cout << "erdos_gallai " << (erdos_gallai_check(d) ? "pass" : "fail") << "\n";
    } else {
      std::cout << "n n/a\nerdos_gallai n/a\n";
    }
    for (auto& v : report.violations)
      std::cout << "violation " << v.condition << " (" << v.pair.first << ","
                << v.pair.second << "): " << v.detail << "\n";
  }
}

int cmd_check(const std::string& jdm_path) {
  JointDegreeMatrix j = load_jdm(jdm_path);
  auto report = is_graphical(j);
  print_report(j, report);
  return report.graphical ? 0 : kExitDomain;
}

int cmd_construct(const std::string& jdm_path, const std::string& out_path) {
  JointDegreeMatrix j = load_jdm(jdm_path);
  SimpleGraph g = greedy_construct(j);
  std::ofstream out(out_path);
  write_edge_list(out, g);
  std::cerr << "wrote " << g.edges.size() << " edges to " << out_path << "\n";
  return 0;
}

int cmd_extract(const std::string& edges_path, bool pseudo,
                const std::string& labels_path) {
  std::ifstream in(edges_path);
  if (!in) throw ParseError(0, "cannot open " + edges_path);
  EdgeListData data = read_edge_list(in, pseudo);
  JointDegreeMatrix j = extract_jdm(data.graph);
  write_jdm(std::cout, j);
  if (!labels_path.empty()) {
    std::ofstream lo(labels_path);
    for (size_t i = 0; i < data.labels.size(); ++i)
      lo << i << ' ' << data.labels[i] << '\n';
  }
  return 0;
}

int cmd_sample(const std::string& jdm_path, const std::string& chain,
               long long samples, long long gap, long long burn_in,
               std::uint64_t seed, const std::string& out_dir,
               const std::string& single_file, bool progress) {
  JointDegreeMatrix j = load_jdm(jdm_path);
  ChainKind kind = chain == "A" ? ChainKind::A : ChainKind::B;
  long long m = edge_count(j);
  if (gap < 0) gap = 5 * m;
  if (burn_in < 0) burn_in = 5 * m;

  std::ofstream stream;
  if (!single_file.empty()) {
    stream.open(single_file);
  } else {
    fs::create_directories(out_dir);
  }
  long long idx = 0;
  SamplerSchedule schedule{burn_in, gap, samples, seed};
  sample(j, kind, schedule, [&](const Pseudograph& g) {
    if (!single_file.empty()) {
      stream << "# sample " << idx << "\n";
      write_edge_list(stream, g);
    } else {
      char name[32];
      std::snprintf(name, sizeof(name), "sample_%06lld.edges", idx);
      std::ofstream out(fs::path(out_dir) / name);
      write_edge_list(out, g);
    }
    ++idx;
    if (progress && samples >= 10 && idx % (samples / 10) == 0)
      std::cerr << "sampled " << idx << "/" << samples << "\n";
  });
  return 0;
}

struct EdgeStats {
  ProbeEdge probe;
  std::vector<double> tau;                       // per replica; NaN if constant
  std::vector<std::optional<long long>> thresh;  // per replica
};

double mean_of(const std::vector<double>& v) {
  double s = 0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

double median_of(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

int cmd_diagnose(const std::string& jdm_path, const std::string& edges_mode,
                 int probe_count, long long steps, long long lag_start,
                 long long lag_end, long long lag_step, double threshold,
                 int replicas, std::uint64_t seed, const std::string& out_dir,
                 const std::vector<long long>& gaps, long long gap_samples,
                 int threads, bool progress) {
  JointDegreeMatrix j = load_jdm(jdm_path);
  auto report = is_graphical(j);
  if (!report.graphical) {
    std::cerr << "input is not graphical\n";
    return kExitDomain;
  }
  fs::create_directories(out_dir);

  std::vector<ProbeEdge> probes;
  if (edges_mode == "auto") {
    probes = select_probe_edges(j, probe_count);
  } else {
    DegreeVector d = derive_degree_vector(j);
    std::ifstream in(edges_mode);
    if (!in) throw ParseError(0, "cannot open " + edges_mode);
    EdgeListData data = read_edge_list(in, true);
    CanonicalLayout layout = CanonicalLayout::from(d);
    for (auto [u, v] : data.graph.edges) {
      int du = layout.degree_of.at(u), dv = layout.degree_of.at(v);
      probes.push_back({std::min(du, dv), std::max(du, dv), u, v, edge_mean(j, du, dv)});
    }
  }

  LagGrid grid{lag_start, lag_step, lag_end};
  std::vector<std::vector<EdgeTimeSeries>> runs(replicas);
  {
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    int workers = threads > 0 ? threads : (int)std::thread::hardware_concurrency();
    workers = std::max(1, std::min(workers, replicas));
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (;;) {
          int r = next.fetch_add(1);
          if (r >= replicas) return;
          runs[r] = run_indicator_chain(j, ChainKind::B, steps, probes,
                                        derive_seed(seed, r));
          if (progress) std::cerr << "replica " << r << " done\n";
        }
      });
    for (auto& t : pool) t.join();
  }

  // Long-format ACF for the first replica.
  std::ofstream acf_out(fs::path(out_dir) / "acf.csv");
  acf_out << "u,v,lag,rho\n";
  std::vector<EdgeStats> stats(probes.size());
  for (size_t p = 0; p < probes.size(); ++p) {
    stats[p].probe = probes[p];
    for (int r = 0; r < replicas; ++r) {
      const auto& x = runs[r][p].samples;
      try {
        AutocorrSeries acf = autocorr_series(x, grid);
        stats[p].tau.push_back(integrated_autocorr(x, grid));
        stats[p].thresh.push_back(threshold_crossing_time(acf, threshold));
        if (r == 0)
          for (size_t i = 0; i < acf.lags.size(); ++i)
            acf_out << probes[p].u << ',' << probes[p].v << ',' << acf.lags[i] << ','
                    << fmt(acf.rho[i]) << '\n';
      } catch (const ZeroVariance&) {
        stats[p].tau.push_back(std::nan(""));
        stats[p].thresh.push_back(std::nullopt);
      }
    }
  }

  // Per-edge summary; constant edges carry NaN and are excluded below.
  std::ofstream sum_out(fs::path(out_dir) / "summary.csv");
  sum_out << "u,v,k,l,mu,tau_mean,tau_median,tau_max,threshold_time_mean\n";
  std::vector<double> edge_tau_mean, edge_tau_median, edge_tau_max;
  std::vector<double> edge_thresh_mean;
  for (auto& es : stats) {
    std::vector<double> tau;
    for (double t : es.tau)
      if (!std::isnan(t)) tau.push_back(t);
    std::vector<double> th;
    for (auto& t : es.thresh)
      if (t) th.push_back(static_cast<double>(*t));
    sum_out << es.probe.u << ',' << es.probe.v << ',' << es.probe.k << ','
            << es.probe.l << ',' << fmt(es.probe.mu.value()) << ',';
    if (tau.empty()) {
      sum_out << "nan,nan,nan,";
    } else {
      double tmean = mean_of(tau), tmed = median_of(tau),
             tmax = *std::max_element(tau.begin(), tau.end());
      sum_out << fmt(tmean) << ',' << fmt(tmed) << ',' << fmt(tmax) << ',';
      edge_tau_mean.push_back(tmean);
      edge_tau_median.push_back(tmed);
      edge_tau_max.push_back(tmax);
    }
    if (th.empty()) {
      sum_out << "nan\n";
    } else {
      double thm = mean_of(th);
      sum_out << fmt(thm) << '\n';
      edge_thresh_mean.push_back(thm);
    }
  }

  std::ofstream agg_out(fs::path(out_dir) / "aggregates.csv");
  agg_out << "family,max,mean,min\n";
  auto agg_row = [&](const char* name, const std::vector<double>& v) {
    if (v.empty()) {
      agg_out << name << ",nan,nan,nan\n";
      return;
    }
    agg_out << name << ',' << fmt(*std::max_element(v.begin(), v.end())) << ','
            << fmt(mean_of(v)) << ',' << fmt(*std::min_element(v.begin(), v.end()))
            << '\n';
  };
  agg_row("tau_mean", edge_tau_mean);
  agg_row("tau_median", edge_tau_median);
  agg_row("tau_max", edge_tau_max);
  agg_row("threshold_time_mean", edge_thresh_mean);

  if (!gaps.empty()) {
    auto curve = tvd_convergence(j, ChainKind::B, gaps, gap_samples, replicas, seed,
                                 threads);
    std::ofstream tvd_out(fs::path(out_dir) / "tvd.csv");
    tvd_out << "gap,tvd_min,tvd_median,tvd_max\n";
    for (auto& pt : curve)
      tvd_out << pt.gap << ',' << fmt(pt.tvd_min) << ',' << fmt(pt.tvd_median) << ','
              << fmt(pt.tvd_max) << '\n';
  }
  return 0;
}

int cmd_synth(const std::string& out_path, const std::string& fill,
              std::vector<int> k_degrees, std::vector<int> l_degrees) {
  SynthSpec spec;
  if (!k_degrees.empty()) spec.k_degrees = std::move(k_degrees);
  if (!l_degrees.empty()) spec.l_degrees = std::move(l_degrees);
  spec.fill = fill == "dense" ? SynthSpec::Fill::Dense : SynthSpec::Fill::Degree1;
  JointDegreeMatrix j = generate_synthetic(spec);
  if (out_path.empty() || out_path == "-") {
    write_jdm(std::cout, j);
  } else {
    std::ofstream out(out_path);
    write_jdm(out, j);
  }
  return 0;
}

int cmd_oracle(const std::string& jdm_path, const std::string& means_path,
               long long limit) {
  JointDegreeMatrix j = load_jdm(jdm_path);
  RealizationSet r = enumerate_realizations(j, limit);
  if (r.graphs.empty()) {
    std::cout << "0 realizations\n";
    return 0;
  }
  auto sg = swap_graph_connected(r);
  std::cout << r.graphs.size() << " realization" << (r.graphs.size() == 1 ? "" : "s")
            << ", " << (sg.connected ? "connected" : "disconnected") << ", diameter "
            << sg.diameter << "\n";
  if (!means_path.empty()) {
    std::ofstream out(means_path);
    out << "u,v,mean_num,mean_den\n";
    for (auto& [e, mu] : exact_edge_means(r))
      out << e.first << ',' << e.second << ',' << mu.num << ',' << mu.den << '\n';
  }
  return 0;
}

// Estimator sanity run on synthetic series with known autocorrelation.
int cmd_selftest() {
  std::mt19937_64 gen(2024);
  const double phi = 0.9;
  const long long n = 100000;

  // 0/1 indicator of a two-state chain with persistence (1+phi)/2, whose
  // autocorrelation is exactly phi^t.
  std::vector<std::uint8_t> x(n);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  x[0] = 0;
  for (long long i = 1; i < n; ++i)
    x[i] = unif(gen) < (1.0 + phi) / 2.0 ? x[i - 1] : (1 - x[i - 1]);

  LagGrid grid{1, 1, 200};
  double tau = integrated_autocorr(x, grid);
  double expect = 0.5 * (1 + phi) / (1 - phi);
  std::cout << "two-state chain (rho(t)=0.9^t): tau_int " << fmt(tau) << " expected "
            << fmt(expect) << "\n";
  for (long long t : {1, 5, 10, 20})
    std::cout << "  rho(" << t << ") " << fmt(autocorr_normalized(x, t)) << " expected "
              << fmt(std::pow(phi, t)) << "\n";

  std::vector<std::uint8_t> iid(n);
  for (long long i = 0; i < n; ++i) iid[i] = gen() & 1;
  std::cout << "iid bernoulli: tau_int " << fmt(integrated_autocorr(iid, LagGrid{1, 1, 100}))
            << " expected 0.5\n";
  bool ok = std::abs(tau - expect) < 0.1 * expect;
  return ok ? 0 : kExitDomain;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"joint degree matrix toolkit: graphicality, construction, sampling, diagnostics"};
  app.require_subcommand(1);
  app.set_config("--config");

  std::string jdm_path, out_path, edges_path, labels_path, chain = "B";
  std::string edges_mode = "auto", single_file, out_dir = ".", fill = "degree1";
  bool pseudo = false, progress = false;
  long long samples = 1, gap = -1, burn_in = -1, steps = 50000;
  long long lag_start = 100, lag_end = 15000, lag_step = 100;
  long long gap_samples = 10000, oracle_limit = 1000000;
  double threshold = 0.001;
  int replicas = 10, probe_count = 300, threads = 0;
  std::uint64_t seed = 12345;
  std::vector<long long> gaps;
  std::vector<int> k_degrees, l_degrees;

  auto* check = app.add_subcommand("check", "test whether a JDM is graphical");
  check->add_option("jdm", jdm_path, "JDM file")->required();

  auto* construct = app.add_subcommand("construct", "build a simple graph realizing a JDM");
  construct->add_option("jdm", jdm_path)->required();
  construct->add_option("-o,--out", out_path, "output edge list")->required();

  auto* extract = app.add_subcommand("extract", "extract the JDM of an edge list");
  extract->add_option("edges", edges_path)->required();
  extract->add_flag("--pseudo", pseudo, "accept self-loops and multi-edges");
  extract->add_option("--labels", labels_path, "write index->label sidecar");

  auto* smp = app.add_subcommand("sample", "MCMC-sample graphs with a fixed JDM");
  smp->add_option("jdm", jdm_path)->required();
  smp->add_option("--chain", chain)->check(CLI::IsMember({"A", "B"}));
  smp->add_option("--samples", samples);
  smp->add_option("--gap", gap, "steps between samples (default 5m)");
  smp->add_option("--burn-in", burn_in, "steps before the first sample (default 5m)");
  smp->add_option("--seed", seed);
  smp->add_option("--out-dir", out_dir);
  smp->add_option("--single-file", single_file, "concatenated stream with separators");
  smp->add_flag("--progress", progress);

  auto* diag = app.add_subcommand("diagnose", "autocorrelation and convergence reports");
  diag->add_option("jdm", jdm_path)->required();
  diag->add_option("--edges", edges_mode, "'auto' or an edge file of probe pairs");
  diag->add_option("--count", probe_count, "probe edges in auto mode");
  diag->add_option("--steps", steps);
  diag->add_option("--lag-start", lag_start);
  diag->add_option("--lag-end", lag_end);
  diag->add_option("--lag-step", lag_step);
  diag->add_option("--threshold", threshold);
  diag->add_option("--replicas", replicas);
  diag->add_option("--seed", seed);
  diag->add_option("--out-dir", out_dir);
  diag->add_option("--gaps", gaps, "gaps for the sample-mean TVD curve");
  diag->add_option("--gap-samples", gap_samples);
  diag->add_option("--threads", threads);
  diag->add_flag("--progress", progress);

  auto* synth = app.add_subcommand("synth", "generate the mean-coverage synthetic JDM");
  synth->add_option("-o,--out", out_path);
  synth->add_option("--fill", fill)->check(CLI::IsMember({"degree1", "dense"}));
  synth->add_option("--k-degrees", k_degrees);
  synth->add_option("--l-degrees", l_degrees);

  auto* oracle = app.add_subcommand("oracle", "exhaustive small-instance ground truth");
  oracle->add_option("jdm", jdm_path)->required();
  oracle->add_option("--means", edges_path, "write exact edge means CSV");
  oracle->add_option("--limit", oracle_limit);

  auto* selftest = app.add_subcommand("selftest", "estimator checks on synthetic series");
  (void)selftest;

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (check->parsed()) return cmd_check(jdm_path);
    if (construct->parsed()) return cmd_construct(jdm_path, out_path);
    if (extract->parsed()) return cmd_extract(edges_path, pseudo, labels_path);
    if (smp->parsed())
      return cmd_sample(jdm_path, chain, samples, gap, burn_in, seed, out_dir,
                        single_file, progress);
    if (diag->parsed())
      return cmd_diagnose(jdm_path, edges_mode, probe_count, steps, lag_start, lag_end,
                          lag_step, threshold, replicas, seed, out_dir, gaps,
                          gap_samples, threads, progress);
    if (synth->parsed()) return cmd_synth(out_path, fill, k_degrees, l_degrees);
    if (oracle->parsed()) return cmd_oracle(jdm_path, edges_path, oracle_limit);
    if (selftest->parsed()) return cmd_selftest();
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}
