#include "decomatch/adversary.hpp"

#include <cmath>

#include "decomatch/errors.hpp"

namespace decomatch {

Instance greedy_hard_instance(double eps) {
  if (!(eps > 0.0) || !(eps <= 1.0)) throw_error(errc::domain_error, "eps must lie in (0, 1]");
  const auto t = static_cast<std::size_t>(std::ceil(1.0 / (eps * eps)));

  std::vector<double> speeds;
  speeds.reserve(t + 1);
  speeds.push_back(1.0);
  speeds.insert(speeds.end(), t, eps / 2.0);

  std::vector<double> jobs;
  jobs.reserve(t + 1);
  const double base = 1.0 - eps / 2.0;
  for (std::size_t i = 1; i <= t + 1; ++i)
    jobs.push_back(std::pow(base, -static_cast<double>(i)));

  return validate_instance(std::move(speeds), std::move(jobs));
}

// ---------------------------------------------------------------------------
// Deterministic upper bound (oscillatory recurrence).

DetUbParams det_ub_params(double delta) {
  if (!(delta > 0.0)) throw_error(errc::domain_error, "delta must be > 0");
  const double root5 = std::sqrt(5.0);
  const double num = 1.0 + std::sqrt(5.0 + 12.0 * delta + 4.0 * delta * delta);
  return {num / (3.0 + root5 + 2.0 * delta), num / (3.0 - root5 + 2.0 * delta)};
}

Instance RecurrenceParams::instance() const {
  std::vector<double> speeds;
  speeds.reserve(w.size());
  speeds.push_back(r);
  if (w.size() > 1) speeds.insert(speeds.end(), w.size() - 1, 1.0);
  return validate_instance(std::move(speeds), w);
}

RecurrenceParams det_ub_sequence(double delta) {
  const auto [a, r] = det_ub_params(delta);
  RecurrenceParams out;
  out.delta = delta;
  out.a = a;
  out.r = r;
  out.w = {1.0, (r - a) / (a * r - 1.0)};

  const double stop = r / (r - 1.0);
  while (out.w.back() / out.w[out.w.size() - 2] > stop) {
    const double next =
        ((a + 1.0) * (r - 1.0) * out.w.back() - r * out.w[out.w.size() - 2]) / (a * r - 1.0);
    if (!std::isfinite(next))
      throw_error(errc::numeric_overflow, "recurrence overflowed before the stopping rule");
    out.w.push_back(next);
    if (out.w.size() > 1000000)
      throw_error(errc::non_termination, "recurrence did not reach the stopping rule");
  }
  return out;
}

DetUbConditionReport check_det_ub_conditions(double a, double r, const std::vector<double>& w) {
  DetUbConditionReport report;
  auto require_ge = [&report](double lhs, double rhs, const std::string& label) {
    const double scale = std::max({1.0, std::fabs(lhs), std::fabs(rhs)});
    const double violation = (rhs - lhs) / scale;
    if (violation > report.max_violation) report.max_violation = violation;
    if (violation > 1e-9 && report.ok) {
      report.ok = false;
      report.first_violation = label;
    }
  };

  require_ge(a * r, 1.0, "a*r >= 1");
  double prefix_sum = 0.0;
  for (std::size_t k = 1; k < w.size(); ++k) {
    prefix_sum += w[k - 1];
    require_ge(a * (r * w[k] + prefix_sum), r * w[k - 1] + w[k],
               "prefix condition at k=" + std::to_string(k));
  }
  if (!w.empty())
    require_ge(a * (r * w.back() + prefix_sum), r * w.back(), "final condition");
  return report;
}

// ---------------------------------------------------------------------------
// Randomized upper bound (prefix distribution).

PrefixDistribution rand_ub_family(int n) {
  if (n < 1 || n > 60) throw_error(errc::domain_error, "n must lie in [1, 60]");
  PrefixDistribution dist;
  dist.n = n;
  dist.normalizer = 1.0 / (1.0 - std::ldexp(1.0, -n));
  dist.sizes.reserve(static_cast<std::size_t>(n));
  dist.probs.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    dist.sizes.push_back(std::ldexp(1.0, i));
    dist.probs.push_back(dist.normalizer * std::ldexp(1.0, -i));
  }
  return dist;
}

Instance PrefixDistribution::instance() const { return prefix_instance(n); }

Instance PrefixDistribution::prefix_instance(int len) const {
  if (len < 1 || len > n) throw_error(errc::domain_error, "prefix length out of range");
  std::vector<double> speeds;
  speeds.reserve(static_cast<std::size_t>(n) + 1);
  speeds.push_back(1.0);
  speeds.insert(speeds.end(), static_cast<std::size_t>(n), 0.25);
  return validate_instance(std::move(speeds),
                           std::vector<double>(sizes.begin(), sizes.begin() + len));
}

}  // namespace decomatch
