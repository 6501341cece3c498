#include "decomatch/online.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "decomatch/errors.hpp"

namespace decomatch {
namespace {

// Gains that are equal in exact arithmetic land a few ulps apart in floating
// point (the adversarial constructions hit this on every step), so the tie
// set is everything within this relative band of the best gain.
constexpr double kTieBand = 1e-9;

long long index_from_log(double size, double log_ratio, double x, double c) {
  const double t = log_ratio - x;
  long long k = static_cast<long long>(std::ceil(t)) - 1;
  // Near an interval boundary the log estimate can be off by an ulp; settle
  // it against the defining inequalities.
  if (std::fabs(t - std::nearbyint(t)) <= 1e-9 * std::max(1.0, std::fabs(t))) {
    while (std::pow(c, static_cast<double>(k) + x) >= size) --k;
    while (std::pow(c, static_cast<double>(k + 1) + x) < size) ++k;
  }
  return k;
}

RunTrace make_trace(const std::vector<double>& speeds, std::vector<std::vector<double>> assigned,
                    std::vector<double> discarded) {
  RunTrace trace;
  trace.assigned = std::move(assigned);
  trace.discarded = std::move(discarded);
  trace.credited.resize(speeds.size(), 0.0);
  trace.profit.resize(speeds.size(), 0.0);
  for (std::size_t i = 0; i < speeds.size(); ++i) {
    if (!trace.assigned[i].empty())
      trace.credited[i] = *std::max_element(trace.assigned[i].begin(), trace.assigned[i].end());
    trace.profit[i] = speeds[i] * trace.credited[i];
  }
  return trace;
}

double trace_value(const RunTrace& trace) {
  double total = 0.0;
  for (double p : trace.profit) total += p;
  return total;
}

}  // namespace

long long interval_index(double size, double x, double c) {
  if (!(size > 0.0)) throw_error(errc::non_positive_job, "interval_index needs size > 0");
  if (!(c > 1.0)) throw_error(errc::domain_error, "interval base must satisfy c > 1");
  if (!(x > 0.0) || !(x <= 1.0)) throw_error(errc::domain_error, "x must lie in (0, 1]");
  return index_from_log(size, std::log(size) / std::log(c), x, c);
}

// ---------------------------------------------------------------------------
// Greedy.

GreedyRunner::GreedyRunner(const Instance& inst, TieRule rule)
    : speeds_(inst.speeds),
      credited_(inst.machines(), 0.0),
      assigned_(inst.machines()) {
  preference_.resize(inst.machines());
  std::iota(preference_.begin(), preference_.end(), std::size_t{0});
  switch (rule) {
    case TieRule::prefer_fastest:
      preference_ = inst.order;
      break;
    case TieRule::prefer_slowest:
      std::sort(preference_.begin(), preference_.end(), [&](std::size_t a, std::size_t b) {
        if (speeds_[a] != speeds_[b]) return speeds_[a] < speeds_[b];
        return a < b;
      });
      break;
    case TieRule::prefer_lowest_index:
      break;  // identity order
  }
}

void GreedyRunner::push(double job) {
  double best_gain = 0.0;
  for (std::size_t i = 0; i < speeds_.size(); ++i) {
    const double gain = speeds_[i] * job - speeds_[i] * credited_[i];
    best_gain = std::max(best_gain, gain);
  }
  if (!(best_gain > 0.0)) {
    discarded_.push_back(job);
    return;
  }
  const double cutoff = best_gain * (1.0 - kTieBand);
  for (std::size_t m : preference_) {
    const double gain = speeds_[m] * job - speeds_[m] * credited_[m];
    if (gain >= cutoff) {
      total_ += speeds_[m] * (job - credited_[m]);
      credited_[m] = job;
      assigned_[m].push_back(job);
      return;
    }
  }
}

RunTrace GreedyRunner::finish() {
  return make_trace(speeds_, std::move(assigned_), std::move(discarded_));
}

// ---------------------------------------------------------------------------
// Interval algorithm.

IntervalRunner::IntervalRunner(const Instance& inst, IntervalParams params)
    : speeds_(inst.speeds),
      order_(inst.order),
      params_(std::move(params)),
      index_(inst.machines(), 0),
      occupied_(inst.machines(), 0),
      credited_(inst.machines(), 0.0),
      assigned_(inst.machines()) {
  if (params_.x.size() != inst.machines())
    throw_error(errc::dimension_mismatch, "interval algorithm needs one x per machine");
  if (!(params_.c > 1.0)) throw_error(errc::domain_error, "interval base must satisfy c > 1");
  for (double x : params_.x)
    if (!(x > 0.0) || !(x <= 1.0)) throw_error(errc::domain_error, "x must lie in (0, 1]");
  log_c_ = std::log(params_.c);
}

void IntervalRunner::push(double job) {
  const double log_ratio = std::log(job) / log_c_;
  for (std::size_t pos = 0; pos < order_.size(); ++pos) {
    const std::size_t m = order_[pos];
    const long long k = index_from_log(job, log_ratio, params_.x[pos], params_.c);
    if (occupied_[m] && k <= index_[m]) continue;
    total_ += speeds_[m] * (job - credited_[m]);
    credited_[m] = job;
    index_[m] = k;
    occupied_[m] = 1;
    assigned_[m].push_back(job);
    return;
  }
  discarded_.push_back(job);
}

RunTrace IntervalRunner::finish() {
  return make_trace(speeds_, std::move(assigned_), std::move(discarded_));
}

// ---------------------------------------------------------------------------
// Drivers.

namespace {

RunResult drive(const Instance& inst, OnlineRunner& runner) {
  for (double job : inst.jobs) runner.push(job);
  RunResult out;
  out.trace = runner.finish();
  out.report = ValueReport::make(trace_value(out.trace), sorted_opt(inst).value);
  return out;
}

}  // namespace

RunResult run_greedy(const Instance& inst, TieRule rule) {
  GreedyRunner runner(inst, rule);
  return drive(inst, runner);
}

RunResult run_interval(const Instance& inst, const IntervalParams& params) {
  IntervalRunner runner(inst, params);
  return drive(inst, runner);
}

RunResult run_interval_random(const Instance& inst, double c, std::uint64_t seed,
                              std::uint64_t trial_index) {
  return run_interval(inst, IntervalParams{c, draw_interval_x(inst.machines(), seed, trial_index)});
}

// ---------------------------------------------------------------------------
// Random stream. Frozen keying: machine position i of trial t under stream
// seed s draws the 64-bit word mix64(mix64(s + PHI * (t+1)) ^ WEYL * (i+1)).

std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

double uniform_open_closed(std::uint64_t word) noexcept {
  return std::ldexp(static_cast<double>(word) + 1.0, -64);
}

std::vector<double> draw_interval_x(std::size_t machine_count, std::uint64_t seed,
                                    std::uint64_t trial_index) {
  constexpr std::uint64_t kPhi = 0x9e3779b97f4a7c15ull;
  constexpr std::uint64_t kWeyl = 0xd1b54a32d192ed03ull;
  const std::uint64_t key = mix64(seed + kPhi * (trial_index + 1));
  std::vector<double> x(machine_count);
  for (std::size_t i = 0; i < machine_count; ++i)
    x[i] = uniform_open_closed(mix64(key ^ (kWeyl * (static_cast<std::uint64_t>(i) + 1))));
  return x;
}

}  // namespace decomatch
