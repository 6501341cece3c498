#pragma once

#include <cstdint>
#include <vector>

#include "decomatch/instance.hpp"

namespace decomatch {

// Base used by the interval algorithm whenever no explicit value is given.
inline constexpr double kDefaultIntervalBase = 3.55829;

// How greedy resolves ties between machines offering the same gain. Each rule
// induces a total order over any tie set (speed order breaks remaining ties
// by original index ascending).
enum class TieRule { prefer_fastest, prefer_slowest, prefer_lowest_index };

// Parameters of the derandomized interval algorithm: a base c > 1 and one
// x in (0,1] per machine, indexed by the fastest-first machine ordering.
struct IntervalParams {
  double c = kDefaultIntervalBase;
  std::vector<double> x;
};

// The unique integer k with c^(k+x) < size <= c^(k+1+x). Intervals are
// left-open right-closed, so a size exactly on a boundary belongs to the
// lower interval.
long long interval_index(double size, double x, double c);

// ---------------------------------------------------------------------------
// Online runners process jobs one at a time so that harnesses can inspect the
// credited value after every prefix. Feed jobs in arrival order via push();
// finish() assembles the trace and may be called once, after the last job.
// Runners hold private copies of the instance data and are cheap to create.

class OnlineRunner {
 public:
  virtual ~OnlineRunner() = default;
  virtual void push(double job) = 0;
  virtual double value() const noexcept = 0;
  virtual RunTrace finish() = 0;
};

class GreedyRunner final : public OnlineRunner {
 public:
  GreedyRunner(const Instance& inst, TieRule rule);
  void push(double job) override;
  double value() const noexcept override { return total_; }
  RunTrace finish() override;

 private:
  std::vector<double> speeds_;
  std::vector<std::size_t> preference_;  // machine indices in tie-break order
  std::vector<double> credited_;
  std::vector<std::vector<double>> assigned_;
  std::vector<double> discarded_;
  double total_ = 0.0;
};

class IntervalRunner final : public OnlineRunner {
 public:
  IntervalRunner(const Instance& inst, IntervalParams params);
  void push(double job) override;
  double value() const noexcept override { return total_; }
  RunTrace finish() override;

 private:
  std::vector<double> speeds_;
  std::vector<std::size_t> order_;  // fastest-first scan order
  IntervalParams params_;
  double log_c_;
  std::vector<long long> index_;  // interval index of the credited job
  std::vector<char> occupied_;
  std::vector<double> credited_;
  std::vector<std::vector<double>> assigned_;
  std::vector<double> discarded_;
  double total_ = 0.0;
};

struct RunResult {
  RunTrace trace;
  ValueReport report;
};

// Greedy with free disposal: a job goes to the machine with the largest
// positive gain s(u) * (job - credited(u)); otherwise it is discarded.
RunResult run_greedy(const Instance& inst, TieRule rule = TieRule::prefer_fastest);

// Derandomized interval algorithm: scan machines fastest-first and assign the
// job to the first machine that is empty or whose credited job lies in a
// strictly smaller interval. Throws errc::dimension_mismatch unless params.x
// has one entry per machine.
RunResult run_interval(const Instance& inst, const IntervalParams& params);

// Randomized interval algorithm: draws each x_i uniformly from (0,1] using a
// deterministic stream keyed by (seed, trial_index, machine position), then
// runs run_interval. Identical inputs yield bit-identical outputs.
RunResult run_interval_random(const Instance& inst, double c, std::uint64_t seed,
                              std::uint64_t trial_index);

// The x vector run_interval_random would use; exposed so reproducibility and
// structural tests can replay runs.
std::vector<double> draw_interval_x(std::size_t machine_count, std::uint64_t seed,
                                    std::uint64_t trial_index);

// ---------------------------------------------------------------------------
// Deterministic pseudo-random primitives (frozen; part of the reproducibility
// contract). x values are (u + 1) * 2^-64, which lies in (0,1] exactly.

std::uint64_t mix64(std::uint64_t z) noexcept;  // splitmix64 finalizer
double uniform_open_closed(std::uint64_t word) noexcept;

}  // namespace decomatch
