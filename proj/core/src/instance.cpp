#include "decomatch/instance.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "decomatch/errors.hpp"

namespace decomatch {

Instance validate_instance(std::vector<double> speeds, std::vector<double> jobs) {
  for (double s : speeds) {
    if (!std::isfinite(s)) throw_error(errc::non_finite_value, "machine speed is not finite");
    if (s <= 0.0) throw_error(errc::non_positive_speed, "machine speed must be > 0");
  }
  for (double w : jobs) {
    if (!std::isfinite(w)) throw_error(errc::non_finite_value, "job size is not finite");
    if (w <= 0.0) throw_error(errc::non_positive_job, "job size must be > 0");
  }
  if (speeds.empty() && !jobs.empty())
    throw_error(errc::empty_machines, "jobs present but no machines");

  Instance inst;
  inst.speeds = std::move(speeds);
  inst.jobs = std::move(jobs);
  inst.order.resize(inst.speeds.size());
  std::iota(inst.order.begin(), inst.order.end(), std::size_t{0});
  std::sort(inst.order.begin(), inst.order.end(), [&](std::size_t a, std::size_t b) {
    if (inst.speeds[a] != inst.speeds[b]) return inst.speeds[a] > inst.speeds[b];
    return a < b;
  });
  return inst;
}

OptAssignment sorted_opt(const Instance& inst) {
  std::vector<std::size_t> by_size(inst.job_count());
  std::iota(by_size.begin(), by_size.end(), std::size_t{0});
  std::sort(by_size.begin(), by_size.end(), [&](std::size_t a, std::size_t b) {
    if (inst.jobs[a] != inst.jobs[b]) return inst.jobs[a] > inst.jobs[b];
    return a < b;
  });

  OptAssignment out;
  const std::size_t matched = std::min(inst.machines(), inst.job_count());
  out.pairs.reserve(matched);
  for (std::size_t i = 0; i < matched; ++i) {
    out.value += inst.speeds[inst.order[i]] * inst.jobs[by_size[i]];
    out.pairs.emplace_back(inst.order[i], by_size[i]);
  }
  return out;
}

double brute_force_opt(const Instance& inst) {
  if (inst.machines() > 8 || inst.job_count() > 8)
    throw_error(errc::too_large, "brute_force_opt is capped at 8 machines and 8 jobs");

  double best = 0.0;
  std::vector<char> used(inst.machines(), 0);
  auto recurse = [&](auto&& self, std::size_t j, double acc) -> void {
    if (j == inst.job_count()) {
      best = std::max(best, acc);
      return;
    }
    self(self, j + 1, acc);  // leave job j unassigned
    for (std::size_t i = 0; i < inst.machines(); ++i) {
      if (used[i]) continue;
      used[i] = 1;
      self(self, j + 1, acc + inst.speeds[i] * inst.jobs[j]);
      used[i] = 0;
    }
  };
  recurse(recurse, 0, 0.0);
  return best;
}

}  // namespace decomatch
