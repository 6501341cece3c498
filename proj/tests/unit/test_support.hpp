#pragma once

#include <random>
#include <utility>
#include <vector>

#include "decomatch/errors.hpp"
#include "decomatch/instance.hpp"

// Expect `expr` to throw decomatch::error with the given code.
#define CHECK_ERRC(expr, expected)                                   \
  do {                                                               \
    bool thrown_ = false;                                            \
    try {                                                            \
      (void)(expr);                                                  \
    } catch (const decomatch::error& e_) {                           \
      thrown_ = true;                                                \
      CHECK(e_.code() == (expected));                                \
    }                                                                \
    CHECK_MESSAGE(thrown_, "expected an error from " #expr);         \
  } while (0)

namespace testutil {

inline std::vector<double> random_values(std::mt19937_64& rng, std::size_t count, double lo,
                                         double hi) {
  std::uniform_real_distribution<double> dist(lo, hi);
  std::vector<double> out(count);
  for (double& v : out) v = dist(rng);
  return out;
}

inline decomatch::Instance random_instance(std::mt19937_64& rng, std::size_t max_machines,
                                           std::size_t max_jobs, std::size_t min_jobs = 0) {
  std::uniform_int_distribution<std::size_t> machines(1, max_machines);
  std::uniform_int_distribution<std::size_t> jobs(min_jobs, max_jobs);
  return decomatch::validate_instance(random_values(rng, machines(rng), 1e-3, 10.0),
                                      random_values(rng, jobs(rng), 1e-3, 10.0));
}

}  // namespace testutil
