#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "decomatch/instance.hpp"
#include "decomatch/online.hpp"

namespace decomatch {

// ---------------------------------------------------------------------------
// Worst prefix ratio of a deterministic online algorithm.

struct PrefixWorstRatio {
  double min_ratio = 1.0;
  std::size_t argmin_prefix = 0;  // prefix length where the minimum occurs
};

// Simulates the runner once over the arrival sequence; after each prefix k
// compares the credited value so far against sorted_opt of that prefix.
// The runner must be freshly constructed for `inst`.
PrefixWorstRatio prefix_worst_ratio(const Instance& inst, OnlineRunner& runner);

// ---------------------------------------------------------------------------
// Exact analysis of the prefix distribution (rand_ub_family).

// Maximum expected value of a deterministic algorithm, via the exact dynamic
// program over states (step t, index j of the largest job on the fast
// machine). Tail sums are evaluated in closed form, not via the coarser
// cn+1-style relaxations.
double dp_best_det(int n);

struct DpTable {
  double value = 0.0;
  std::vector<std::vector<double>> f;  // f[t][j], j <= t
};

DpTable dp_best_det_table(int n);

// Same maximum by enumerating all 2^n fast/slow indicator vectors. Requires
// n <= 20 (throws errc::too_large). Matches dp_best_det bit for bit: both
// accumulate the same per-step terms left to right.
double enumerate_best_det(int n);

// Expected offline optimum sum_i p_i * OPT_i in closed form,
// c * (5n/4 - (1 - 2^-n)/2).
double expected_opt_prefix(int n);

// ---------------------------------------------------------------------------
// Monte-Carlo estimation for the randomized interval algorithm.

struct TrialRecord {
  std::uint64_t trial = 0;
  double alg_value = 0.0;
  double opt_value = 0.0;
  double ratio = 0.0;
};

struct McStats {
  std::uint64_t trials = 0;
  double mean_ratio = 0.0;
  double sample_std = 0.0;   // n-1 denominator; 0 for a single trial
  double std_error = 0.0;    // sample_std / sqrt(trials)
  double min_ratio = 0.0;
  double max_ratio = 0.0;
  std::vector<TrialRecord> records;  // trial-index order
};

// Runs run_interval_random for trial_index = 0..trials-1. Trials may be
// computed on several threads; records are stored by trial index and reduced
// in index order, so results are identical for any thread count.
McStats monte_carlo(const Instance& inst, double c, std::uint64_t trials, std::uint64_t seed,
                    unsigned threads = 1);

// CSV with header trial,alg_value,opt_value,ratio; 17 significant digits,
// LF line endings. Byte-identical across runs with equal inputs.
std::string mc_csv(const McStats& stats);

// {"trials":..,"mean_ratio":..,"sample_std":..,"stderr":..,"min_ratio":..,
//  "max_ratio":..} at full precision.
std::string mc_summary_json(const McStats& stats);

}  // namespace decomatch
