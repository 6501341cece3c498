#include "decomatch/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <thread>

#include "decomatch/errors.hpp"
#include "decomatch/io.hpp"

namespace decomatch {

PrefixWorstRatio prefix_worst_ratio(const Instance& inst, OnlineRunner& runner) {
  PrefixWorstRatio out;
  std::vector<double> prefix_jobs;
  prefix_jobs.reserve(inst.job_count());
  for (std::size_t k = 0; k < inst.job_count(); ++k) {
    runner.push(inst.jobs[k]);
    prefix_jobs.push_back(inst.jobs[k]);
    const Instance prefix = validate_instance(inst.speeds, prefix_jobs);
    const double opt = sorted_opt(prefix).value;
    const double ratio = runner.value() / opt;  // opt > 0: jobs are positive
    if (ratio < out.min_ratio) {
      out.min_ratio = ratio;
      out.argmin_prefix = k + 1;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Exact prefix-distribution analysis. Both routes below accumulate the same
// per-step terms left to right, so the DP and the enumeration agree bitwise.

namespace {

// sum_{i >= t} p_i = c (2^(1-t) - 2^-n)
double tail_sum(int t, int n, double c) {
  return c * (std::ldexp(1.0, 1 - t) - std::ldexp(1.0, -n));
}

double family_normalizer(int n) { return 1.0 / (1.0 - std::ldexp(1.0, -n)); }

void check_family_n(int n, int cap) {
  if (n < 1 || n > cap) throw_error(errc::domain_error, "n out of range");
}

}  // namespace

DpTable dp_best_det_table(int n) {
  check_family_n(n, 60);
  const double c = family_normalizer(n);
  DpTable out;
  out.f.assign(static_cast<std::size_t>(n) + 1,
               std::vector<double>(static_cast<std::size_t>(n) + 1,
                                   -std::numeric_limits<double>::infinity()));
  out.f[0][0] = 0.0;
  for (int t = 1; t <= n; ++t) {
    const double w_t = std::ldexp(1.0, t);
    const double tail = tail_sum(t, n, c);
    // keep the largest fast job at j < t: job t goes to a slow machine
    for (int j = 0; j < t; ++j)
      out.f[t][j] = out.f[t - 1][j] + w_t / 4.0 * tail;
    // job t goes to the fast machine on top of the best predecessor
    double best = -std::numeric_limits<double>::infinity();
    for (int m = 0; m < t; ++m) {
      const double w_m = m >= 1 ? std::ldexp(1.0, m) : 0.0;
      best = std::max(best, out.f[t - 1][m] + (w_t - w_m) * tail);
    }
    out.f[t][t] = best;
  }
  out.value = *std::max_element(out.f[n].begin(), out.f[n].end());
  return out;
}

double dp_best_det(int n) { return dp_best_det_table(n).value; }

double enumerate_best_det(int n) {
  check_family_n(n, 60);
  if (n > 20) throw_error(errc::too_large, "enumeration is capped at n = 20");
  const double c = family_normalizer(n);
  double best = -std::numeric_limits<double>::infinity();
  for (std::uint32_t strategy = 0; strategy < (1u << n); ++strategy) {
    double value = 0.0;
    int largest_fast = 0;  // 0 encodes the sentinel job of size 0
    for (int t = 1; t <= n; ++t) {
      const double w_t = std::ldexp(1.0, t);
      const double tail = tail_sum(t, n, c);
      if (strategy >> (t - 1) & 1u) {
        const double w_m = largest_fast >= 1 ? std::ldexp(1.0, largest_fast) : 0.0;
        value += (w_t - w_m) * tail;
        largest_fast = t;
      } else {
        value += w_t / 4.0 * tail;
      }
    }
    best = std::max(best, value);
  }
  return best;
}

double expected_opt_prefix(int n) {
  check_family_n(n, 60);
  const double c = family_normalizer(n);
  return c * (1.25 * n - 0.5 * (1.0 - std::ldexp(1.0, -n)));
}

// ---------------------------------------------------------------------------
// Monte Carlo.

McStats monte_carlo(const Instance& inst, double c, std::uint64_t trials, std::uint64_t seed,
                    unsigned threads) {
  if (trials == 0) throw_error(errc::zero_trials, "monte_carlo needs at least one trial");
  if (!(c > 1.0)) throw_error(errc::domain_error, "interval base must satisfy c > 1");

  const double opt = sorted_opt(inst).value;
  McStats stats;
  stats.trials = trials;
  stats.records.resize(trials);

  auto run_block = [&](std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t t = lo; t < hi; ++t) {
      const RunResult result = run_interval_random(inst, c, seed, t);
      const double ratio = opt > 0.0 ? result.report.alg_value / opt
                                     : std::numeric_limits<double>::quiet_NaN();
      stats.records[t] = {t, result.report.alg_value, opt, ratio};
    }
  };

  const std::uint64_t workers =
      std::min<std::uint64_t>(std::max(1u, threads), trials);
  if (workers <= 1) {
    run_block(0, trials);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::uint64_t chunk = (trials + workers - 1) / workers;
    for (std::uint64_t w = 0; w < workers; ++w) {
      const std::uint64_t lo = w * chunk;
      const std::uint64_t hi = std::min(trials, lo + chunk);
      if (lo < hi) pool.emplace_back(run_block, lo, hi);
    }
    for (auto& th : pool) th.join();
  }

  // Reduce in trial order so the output is independent of the thread count.
  double sum = 0.0;
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (const TrialRecord& rec : stats.records) {
    sum += rec.ratio;
    lo = std::min(lo, rec.ratio);
    hi = std::max(hi, rec.ratio);
  }
  stats.mean_ratio = sum / static_cast<double>(trials);
  stats.min_ratio = lo;
  stats.max_ratio = hi;
  double sq = 0.0;
  for (const TrialRecord& rec : stats.records) {
    const double d = rec.ratio - stats.mean_ratio;
    sq += d * d;
  }
  stats.sample_std = trials > 1 ? std::sqrt(sq / static_cast<double>(trials - 1)) : 0.0;
  stats.std_error = stats.sample_std / std::sqrt(static_cast<double>(trials));
  return stats;
}

std::string mc_csv(const McStats& stats) {
  std::string out = "trial,alg_value,opt_value,ratio\n";
  char line[256];
  for (const TrialRecord& rec : stats.records) {
    std::snprintf(line, sizeof line, "%llu,%.17g,%.17g,%.17g\n",
                  static_cast<unsigned long long>(rec.trial), rec.alg_value, rec.opt_value,
                  rec.ratio);
    out += line;
  }
  return out;
}

std::string mc_summary_json(const McStats& stats) {
  char buf[512];
  std::snprintf(buf, sizeof buf,
                "{\"trials\":%llu,\"mean_ratio\":%.17g,\"sample_std\":%.17g,\"stderr\":%.17g,"
                "\"min_ratio\":%.17g,\"max_ratio\":%.17g}",
                static_cast<unsigned long long>(stats.trials), stats.mean_ratio, stats.sample_std,
                stats.std_error, stats.min_ratio, stats.max_ratio);
  return buf;
}

}  // namespace decomatch
