#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace decomatch {

// A problem instance: machines with positive speeds (arbitrary order) and
// jobs with positive sizes in arrival order. The bipartite graph is complete;
// assigning job v to machine u is worth speeds[u] * jobs[v], and under free
// disposal a machine is credited only for the largest job it ever received.
//
// `order` is the frozen machine ordering used wherever a fastest-first scan
// is required: indices sorted by speed descending, ties broken by original
// index ascending. All types here are immutable value types once built.
struct Instance {
  std::vector<double> speeds;
  std::vector<double> jobs;
  std::vector<std::size_t> order;

  std::size_t machines() const noexcept { return speeds.size(); }
  std::size_t job_count() const noexcept { return jobs.size(); }
};

// Validates raw data and derives the frozen machine ordering. Rejects
// non-positive or non-finite entries and job lists without any machine.
Instance validate_instance(std::vector<double> speeds, std::vector<double> jobs);

// Offline optimum: the i-th largest job on the i-th fastest machine.
// Equal job sizes are ranked by arrival index ascending.
struct OptAssignment {
  double value = 0.0;
  // (machine index, job index) per matched rank, fastest/largest first.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
};

OptAssignment sorted_opt(const Instance& inst);

// Exhaustive oracle: exact maximum over all one-to-one partial assignments.
// Capped at 8 machines and 8 jobs (throws errc::too_large beyond that).
double brute_force_opt(const Instance& inst);

// What an online run did. Assignment lists are in assignment order; for the
// interval algorithm they are strictly increasing in interval index and hence
// in size. Jobs accepted by no machine land in `discarded`.
struct RunTrace {
  std::vector<std::vector<double>> assigned;  // by original machine index
  std::vector<double> discarded;              // arrival order
  std::vector<double> credited;               // max of assigned[i], 0 if empty
  std::vector<double> profit;                 // speeds[i] * credited[i]
};

struct ValueReport {
  double alg_value = 0.0;
  double opt_value = 0.0;
  std::optional<double> ratio;  // alg/opt; empty when opt_value == 0

  static ValueReport make(double alg, double opt) {
    ValueReport r;
    r.alg_value = alg;
    r.opt_value = opt;
    if (opt > 0.0) r.ratio = alg / opt;
    return r;
  }
};

}  // namespace decomatch
