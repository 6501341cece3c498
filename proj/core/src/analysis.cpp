#include "decomatch/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "decomatch/errors.hpp"
#include "decomatch/online.hpp"

namespace decomatch {
namespace {

constexpr double kE = std::numbers::e;

double first_branch(double c) { return (c - 1.0) / (c * std::log(c)); }

}  // namespace

// ---------------------------------------------------------------------------
// Lambert W.

double lambert_w0(double x) {
  constexpr double kNegInvE = -0.36787944117144233;
  if (!(x >= kNegInvE)) throw_error(errc::domain_error, "lambert_w0 needs x >= -1/e");
  if (x == 0.0) return 0.0;

  double w;
  if (x > 0.0) {
    w = std::log1p(x);  // good start on the whole positive axis
  } else if (x > -0.25) {
    w = x * (1.0 - x);
  } else {
    // expansion around the branch point at -1/e
    const double p = std::sqrt(std::max(0.0, 2.0 * (1.0 + kE * x)));
    w = -1.0 + p - p * p / 3.0;
  }

  const double tol = 1e-12 * std::max(1.0, std::fabs(x));
  for (int iter = 0; iter < 64; ++iter) {
    const double ew = std::exp(w);
    const double f = w * ew - x;
    if (std::fabs(f) <= tol) return w;
    const double wp1 = w + 1.0;
    const double denom = ew * wp1 - (w + 2.0) * f / (2.0 * wp1);
    if (denom == 0.0) break;
    w -= f / denom;
  }
  if (std::fabs(w * std::exp(w) - x) <= tol) return w;
  throw_error(errc::non_termination, "lambert_w0 did not converge");
}

double h_of_c(double c) {
  if (!(c > 1.0 + 1e-9)) throw_error(errc::domain_error, "h(c) needs c > 1");
  const double beta = c * std::log(c) / (c - 1.0) - 1.0;
  return 1.0 - lambert_w0(beta * std::exp(beta) / c) / beta;
}

double bound_of_c(double c, bool allow_below_e) {
  if (!(c >= kE) && !allow_below_e)
    throw_error(errc::domain_error, "bound_of_c needs c >= e (override to explore)");
  if (!(c > 1.0 + 1e-9)) throw_error(errc::domain_error, "bound_of_c needs c > 1");
  return std::min(first_branch(c), h_of_c(c));
}

CStarResult find_cstar(double lo, double hi, double tol) {
  if (!(tol > 0.0)) throw_error(errc::domain_error, "tol must be > 0");
  if (!(lo < hi)) throw_error(errc::domain_error, "needs lo < hi");
  if (!(lo >= kE - 1e-12)) throw_error(errc::domain_error, "needs lo >= e");

  // Golden-section maximization of min(first branch, h). The bound rises with
  // h and falls with the first branch, so an interior maximum sits at their
  // crossing.
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c1 = b - inv_phi * (b - a);
  double c2 = a + inv_phi * (b - a);
  double f1 = bound_of_c(c1);
  double f2 = bound_of_c(c2);
  while (b - a > tol) {
    if (f1 < f2) {
      a = c1;
      c1 = c2;
      f1 = f2;
      c2 = a + inv_phi * (b - a);
      f2 = bound_of_c(c2);
    } else {
      b = c2;
      c2 = c1;
      f2 = f1;
      c1 = b - inv_phi * (b - a);
      f1 = bound_of_c(c1);
    }
  }
  double cstar = 0.5 * (a + b);
  if (cstar - lo <= 2.0 * tol || hi - cstar <= 2.0 * tol)
    throw_error(errc::no_maximum_in_range, "bound_of_c is monotone on the given range");

  // Refine on the branch crossing.
  auto gap = [](double c) { return first_branch(c) - h_of_c(c); };
  double blo = lo, bhi = hi;
  if (gap(blo) > 0.0 && gap(bhi) < 0.0) {
    for (int iter = 0; iter < 200 && bhi - blo > 1e-13; ++iter) {
      const double mid = 0.5 * (blo + bhi);
      (gap(mid) > 0.0 ? blo : bhi) = mid;
    }
    cstar = 0.5 * (blo + bhi);
  }
  return {cstar, bound_of_c(cstar)};
}

// ---------------------------------------------------------------------------
// Speed profile and Delta.

double SpeedProfile::operator()(double y) const {
  auto it = std::upper_bound(sizes.begin(), sizes.end(), y);
  if (it == sizes.begin()) return 0.0;
  return speeds[static_cast<std::size_t>(it - sizes.begin()) - 1];
}

SpeedProfile speed_profile(const Instance& inst) {
  const OptAssignment opt = sorted_opt(inst);
  std::vector<std::pair<double, double>> points;  // (size, speed in OPT)
  points.reserve(inst.job_count());
  std::vector<char> matched(inst.job_count(), 0);
  for (const auto& [machine, job] : opt.pairs) {
    points.emplace_back(inst.jobs[job], inst.speeds[machine]);
    matched[job] = 1;
  }
  for (std::size_t j = 0; j < inst.job_count(); ++j)
    if (!matched[j]) points.emplace_back(inst.jobs[j], 0.0);
  std::sort(points.begin(), points.end());

  SpeedProfile prof;
  for (const auto& [size, speed] : points) {
    if (!prof.sizes.empty() && prof.sizes.back() == size)
      prof.speeds.back() = std::max(prof.speeds.back(), speed);
    else {
      prof.sizes.push_back(size);
      prof.speeds.push_back(speed);
    }
  }
  return prof;
}

DeltaBreakdown delta_first_machine(const Instance& inst, std::vector<double> fastest_trace) {
  if (inst.machines() == 0) throw_error(errc::empty_machines, "instance has no machines");
  const double s1 = inst.speeds[inst.order[0]];
  const double wmax =
      inst.jobs.empty() ? 0.0 : *std::max_element(inst.jobs.begin(), inst.jobs.end());

  DeltaBreakdown out;
  if (fastest_trace.empty()) {
    // Removing the machine loses at most its own OPT contribution.
    out.delta = s1 * wmax;
    return out;
  }
  std::sort(fastest_trace.begin(), fastest_trace.end(), std::greater<>());
  const SpeedProfile prof = speed_profile(inst);
  out.top = fastest_trace.front();
  out.rest.assign(fastest_trace.begin() + 1, fastest_trace.end());
  out.delta = s1 * wmax - prof(out.top) * (wmax - out.top);
  for (double wk : out.rest) out.delta += wk * prof(wk);
  return out;
}

// ---------------------------------------------------------------------------
// Local maxima.

std::vector<double> normalize_jobs(std::vector<double> jobs, double c) {
  if (!(c > 1.0)) throw_error(errc::domain_error, "normalization base must satisfy c > 1");
  if (jobs.empty()) return jobs;
  const auto max_it = std::max_element(jobs.begin(), jobs.end());
  const double max_size = *max_it;
  if (!(max_size > 0.0)) throw_error(errc::non_positive_job, "job size must be > 0");
  const std::size_t max_pos = static_cast<std::size_t>(max_it - jobs.begin());
  for (double& w : jobs) w = std::min(w * c / max_size, c);
  jobs[max_pos] = c;  // exact anchor for the top of the range
  return jobs;
}

double LocalMaxima::m_s(double y) const {
  auto it = std::upper_bound(maxima.begin(), maxima.end(), y);
  if (it == maxima.end() || *it > c * y) return 0.0;
  return *it;
}

LocalMaxima local_maxima_ms(const std::vector<double>& jobs, double c) {
  if (!(c > 1.0)) throw_error(errc::domain_error, "local_maxima_ms needs c > 1");
  LocalMaxima lm;
  lm.c = c;
  double best = 0.0;
  for (double w : jobs) {
    if (w > best) {
      lm.maxima.push_back(w);
      best = w;
    }
  }
  lm.u0 = lm.m_s(1.0);
  return lm;
}

// ---------------------------------------------------------------------------
// Recursive Delta certification.

DeltaRecursionReport verify_delta_recursion(const Instance& inst, double c,
                                            const std::vector<double>& x, const OptOracle& opt) {
  const std::size_t machines = inst.machines();
  if (x.size() != machines)
    throw_error(errc::dimension_mismatch, "needs one x per machine");

  // Replay the deterministic interval run, recording how far down the scan
  // each job travelled (machines == discarded).
  std::vector<std::size_t> accepted_at(inst.job_count(), machines);
  std::vector<std::vector<double>> taken(machines);
  {
    std::vector<long long> index(machines, 0);
    std::vector<char> occupied(machines, 0);
    for (std::size_t j = 0; j < inst.job_count(); ++j) {
      const double w = inst.jobs[j];
      for (std::size_t pos = 0; pos < machines; ++pos) {
        const long long k = interval_index(w, x[pos], c);
        if (occupied[pos] && k <= index[pos]) continue;
        index[pos] = k;
        occupied[pos] = 1;
        accepted_at[j] = pos;
        taken[pos].push_back(w);
        break;
      }
    }
  }

  DeltaRecursionReport report;
  report.opt_values.reserve(machines);
  report.deltas.reserve(machines);
  report.profits.reserve(machines);
  report.max_step_violation = -std::numeric_limits<double>::infinity();

  std::vector<double> opts(machines + 1, 0.0);
  std::vector<Instance> subs;
  subs.reserve(machines);
  for (std::size_t pos = 0; pos < machines; ++pos) {
    std::vector<double> speeds;
    speeds.reserve(machines - pos);
    for (std::size_t q = pos; q < machines; ++q) speeds.push_back(inst.speeds[inst.order[q]]);
    std::vector<double> jobs;
    for (std::size_t j = 0; j < inst.job_count(); ++j)
      if (accepted_at[j] >= pos) jobs.push_back(inst.jobs[j]);
    subs.push_back(validate_instance(std::move(speeds), std::move(jobs)));
    opts[pos] = opt ? opt(subs[pos]) : sorted_opt(subs[pos]).value;
  }

  double delta_sum = 0.0;
  for (std::size_t pos = 0; pos < machines; ++pos) {
    const double speed = inst.speeds[inst.order[pos]];
    const double credited =
        taken[pos].empty() ? 0.0 : *std::max_element(taken[pos].begin(), taken[pos].end());
    const double delta = delta_first_machine(subs[pos], taken[pos]).delta;
    report.opt_values.push_back(opts[pos]);
    report.deltas.push_back(delta);
    report.profits.push_back(speed * credited);
    report.max_step_violation =
        std::max(report.max_step_violation, opts[pos] - opts[pos + 1] - delta);
    delta_sum += delta;
  }
  if (machines == 0) report.max_step_violation = 0.0;
  report.sum_violation = (machines == 0 ? 0.0 : opts[0]) - delta_sum;
  return report;
}

// ---------------------------------------------------------------------------
// Grid certifications.

double verify_ratio_all1(double c, std::size_t grid_size) {
  if (!(c >= kE)) throw_error(errc::domain_error, "verify_ratio_all1 needs c >= e");
  if (grid_size < 2) throw_error(errc::domain_error, "grid needs at least 2 points");
  const double alpha = h_of_c(c);
  const double log_c = std::log(c);
  double worst = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < grid_size; ++i) {
    const double u0 = 1.0 + (c - 1.0) * static_cast<double>(i) / static_cast<double>(grid_size - 1);
    const double lhs = alpha * (u0 * c / (c - 1.0) + (c - u0) / log_c);
    const double rhs = (c - u0 + u0 * std::log(u0)) / log_c;
    worst = std::max(worst, lhs - rhs);
  }
  return worst;
}

double max_ft_violation(double c, std::size_t grid_size) {
  if (!(c > 1.0)) throw_error(errc::domain_error, "max_ft_violation needs c > 1");
  if (grid_size < 2) throw_error(errc::domain_error, "grid needs at least 2 points");
  const double log_c = std::log(c);
  double worst = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < grid_size; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(grid_size - 1);
    const double f = c * t + (c - std::pow(c, t)) / log_c;
    worst = std::max(worst, f - c);  // f(1) = c
  }
  return worst;
}

}  // namespace decomatch
