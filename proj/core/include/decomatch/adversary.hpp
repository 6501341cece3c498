#pragma once

#include <string>
#include <vector>

#include "decomatch/instance.hpp"

namespace decomatch {

// Hard instance for greedy: one machine of speed 1, t = ceil(1/eps^2)
// machines of speed eps/2, and jobs (1-eps/2)^-i for i = 1..t+1 arriving in
// ascending order. Greedy with the prefer-fastest rule keeps everything on
// the fast machine and its ratio is at most 1/(2-eps).
Instance greedy_hard_instance(double eps);

// ---------------------------------------------------------------------------
// Deterministic upper-bound family: an oscillatory job sequence built from a
// second order recurrence whose characteristic roots are complex.

struct DetUbParams {
  double a = 0.0;  // competitive-ratio target
  double r = 0.0;  // fast machine speed
};

// a = (1 + sqrt(5 + 12 d + 4 d^2)) / (3 + sqrt(5) + 2 d), and r with
// denominator 3 - sqrt(5) + 2 d. As d -> 0, a -> (sqrt(5)-1)/2 and
// r -> 2 + sqrt(5).
DetUbParams det_ub_params(double delta);

struct RecurrenceParams {
  double delta = 0.0;
  double a = 0.0;
  double r = 0.0;
  std::vector<double> w;  // w_0 = 1, strictly increasing

  // One machine of speed r, (w.size()-1) machines of speed 1; jobs = w.
  Instance instance() const;
};

// Iterates (a r - 1) w_k - (a+1)(r-1) w_{k-1} + r w_{k-2} = 0 from w_0 = 1,
// w_1 = (r-a)/(a r - 1) until the first n with w_n / w_{n-1} <= r/(r-1).
RecurrenceParams det_ub_sequence(double delta);

struct DetUbConditionReport {
  bool ok = true;
  std::string first_violation;  // empty when ok
  double max_violation = 0.0;   // relative; positive parts only
};

// Checks, at relative tolerance 1e-9:
//   a r >= 1
//   a (r w_k + sum_{j<k} w_j) >= r w_{k-1} + w_k   for k = 1..n
//   a (r w_n + sum_{j<n} w_j) >= r w_n
// Together these cap every deterministic algorithm at ratio a on some prefix.
DetUbConditionReport check_det_ub_conditions(double a, double r, const std::vector<double>& w);

// ---------------------------------------------------------------------------
// Randomized upper-bound family: doubling jobs presented as a distribution
// over prefixes, against one fast machine (speed 1) and n slow (speed 1/4).

struct PrefixDistribution {
  int n = 0;
  std::vector<double> sizes;  // 2^1 .. 2^n
  std::vector<double> probs;  // p_i = c / 2^i
  double normalizer = 0.0;    // c = 1 / (1 - 2^-n)

  Instance instance() const;               // full sequence
  Instance prefix_instance(int len) const;  // jobs 2^1 .. 2^len
};

// Requires 1 <= n <= 60 so the sizes stay inside double range.
PrefixDistribution rand_ub_family(int n);

}  // namespace decomatch
