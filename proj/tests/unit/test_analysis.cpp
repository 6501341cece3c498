#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "decomatch/analysis.hpp"
#include "decomatch/errors.hpp"
#include "decomatch/online.hpp"
#include "test_support.hpp"

using namespace decomatch;

namespace {

constexpr double kE = std::numbers::e;

// Regression anchors computed with a 40-digit Halley/Lambert oracle before
// the implementation was written.
constexpr double kHofE = 0.5061151061040821;
constexpr double kHofC0 = 0.5664361641854377;
constexpr double kFirstBranchC0 = 0.5664361529982349;
constexpr double kCStar = 3.5582899054822186;
constexpr double kBoundCStar = 0.5664361589709550;

double first_branch(double c) { return (c - 1.0) / (c * std::log(c)); }

}  // namespace

TEST_SUITE("analysis") {

TEST_CASE("lambert_w0 exact points") {
  CHECK(lambert_w0(0.0) == 0.0);
  CHECK(lambert_w0(kE) == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(lambert_w0(2.0 * kE * kE) == doctest::Approx(2.0).epsilon(1e-13));
  CHECK_ERRC(lambert_w0(-0.5), errc::domain_error);
  CHECK(lambert_w0(-0.3) == doctest::Approx(-0.3 * std::exp(-lambert_w0(-0.3))).epsilon(1e-9));
}

TEST_CASE("lambert_w0 round-trips y e^y") {
  std::mt19937_64 rng(314);
  std::uniform_real_distribution<double> ys(0.0, 20.0);
  for (int it = 0; it < 10000; ++it) {
    const double y = ys(rng);
    const double w = lambert_w0(y * std::exp(y));
    CHECK(std::fabs(w - y) <= 1e-10 * std::max(1.0, y));
  }
}

TEST_CASE("h_of_c matches the high-precision oracle") {
  CHECK(h_of_c(kE) == doctest::Approx(kHofE).epsilon(1e-11));
  CHECK(h_of_c(3.55829) == doctest::Approx(kHofC0).epsilon(1e-11));
  CHECK(h_of_c(3.55829) >= 0.5663);
  CHECK_ERRC(h_of_c(1.0), errc::domain_error);
  CHECK_ERRC(h_of_c(1.0 + 1e-12), errc::domain_error);
}

TEST_CASE("bound_of_c evaluates the minimum of the two branches") {
  CHECK(bound_of_c(kE) == doctest::Approx(kHofE).epsilon(1e-11));  // h is the min at e
  CHECK(first_branch(kE) == doctest::Approx((kE - 1.0) / kE).epsilon(1e-14));
  CHECK(bound_of_c(3.55829) == doctest::Approx(kFirstBranchC0).epsilon(1e-11));
  CHECK(bound_of_c(3.55829) >= 0.5663);
  CHECK(bound_of_c(3.55829) <= 0.5665);
  CHECK_ERRC(bound_of_c(2.0), errc::domain_error);
  CHECK(bound_of_c(2.0, true) > 0.0);   // exploration override
  CHECK(bound_of_c(1e9) < 0.06);        // first branch decays to zero
}

TEST_CASE("find_cstar locates the branch crossing") {
  const CStarResult res = find_cstar(kE, 6.0, 1e-6);
  CHECK(std::fabs(res.cstar - 3.55829) <= 5e-3);
  CHECK(std::fabs(res.cstar - kCStar) <= 1e-7);
  CHECK(res.bound == doctest::Approx(kBoundCStar).epsilon(1e-10));
  CHECK(res.bound >= bound_of_c(3.55829) - 1e-9);
}

TEST_CASE("find_cstar rejects monotone ranges") {
  CHECK_ERRC(find_cstar(5.0, 6.0, 1e-6), errc::no_maximum_in_range);
  CHECK_ERRC(find_cstar(kE, 3.0, 1e-6), errc::no_maximum_in_range);
  CHECK_ERRC(find_cstar(kE, 6.0, -1.0), errc::domain_error);
  CHECK_ERRC(find_cstar(1.5, 6.0, 1e-6), errc::domain_error);
}

TEST_CASE("the two branches cross exactly once over [e, 6]") {
  const int grid = 1000;
  int sign_changes = 0;
  double prev = first_branch(kE) - h_of_c(kE);
  std::vector<double> bounds(grid);
  for (int i = 0; i < grid; ++i) {
    const double c = kE + (6.0 - kE) * i / (grid - 1);
    const double gap = first_branch(c) - h_of_c(c);
    if ((gap > 0.0) != (prev > 0.0)) ++sign_changes;
    prev = gap;
    bounds[i] = bound_of_c(c);
  }
  CHECK(sign_changes == 1);

  // unimodal: rises to the max, falls afterwards
  const auto peak = std::max_element(bounds.begin(), bounds.end());
  for (auto it = bounds.begin(); it != peak; ++it) CHECK(*it <= *(it + 1) + 1e-12);
  for (auto it = peak; it + 1 != bounds.end(); ++it) CHECK(*it >= *(it + 1) - 1e-12);
}

TEST_CASE("speed_profile follows the sorted optimum") {
  const Instance inst = validate_instance({1.0, 0.5}, {4.0, 3.0});
  const SpeedProfile prof = speed_profile(inst);
  CHECK(prof(2.9) == 0.0);
  CHECK(prof(3.0) == 0.5);
  CHECK(prof(3.9) == 0.5);
  CHECK(prof(4.0) == 1.0);
  CHECK(prof(100.0) == 1.0);
}

TEST_CASE("speed_profile edge cases") {
  CHECK(speed_profile(validate_instance({1.0}, {}))(1.0) == 0.0);
  // more jobs than machines: the smallest job is unmatched
  const SpeedProfile prof = speed_profile(validate_instance({1.0}, {4.0, 3.0}));
  CHECK(prof(3.5) == 0.0);
  CHECK(prof(4.0) == 1.0);
}

TEST_CASE("delta_first_machine reproduces the worked example") {
  const Instance inst = validate_instance({1.0, 0.5}, {4.0, 3.0});
  const DeltaBreakdown d = delta_first_machine(inst, {4.0, 3.0});
  CHECK(d.top == 4.0);
  CHECK(d.delta == doctest::Approx(5.5));
  // OPT_1 - OPT_2 where machine 0 and both jobs leave: 5.5 - 0
  CHECK(sorted_opt(inst).value - 0.0 <= d.delta + 1e-12);
}

TEST_CASE("delta_first_machine degenerate cases") {
  const Instance single = validate_instance({2.0}, {3.0});
  CHECK(delta_first_machine(single, {3.0}).delta == doctest::Approx(6.0));
  CHECK(delta_first_machine(single, {}).delta == doctest::Approx(6.0));

  // trace below every matched job: s(w) = 0 reduces delta to s1 * Wmax
  const Instance inst = validate_instance({1.0, 0.5}, {4.0, 3.5, 3.0});
  CHECK(delta_first_machine(inst, {3.0}).delta == doctest::Approx(4.0));
}

TEST_CASE("delta bounds OPT_1 - OPT_2 on random interval runs") {
  std::mt19937_64 rng(42);
  for (int it = 0; it < 300; ++it) {
    const Instance inst = testutil::random_instance(rng, 5, 6, 1);
    const RunResult res = run_interval_random(inst, 2.2, 77, static_cast<std::uint64_t>(it));
    const std::size_t fastest = inst.order[0];
    const DeltaBreakdown d = delta_first_machine(inst, res.trace.assigned[fastest]);
    CHECK(d.delta >= inst.speeds[fastest] * d.top - 1e-12);

    // rebuild the reduced instance without the fastest machine and its jobs
    std::vector<double> speeds;
    for (std::size_t i = 0; i < inst.machines(); ++i)
      if (i != fastest) speeds.push_back(inst.speeds[i]);
    std::vector<double> jobs = inst.jobs;
    for (double taken : res.trace.assigned[fastest])
      jobs.erase(std::find(jobs.begin(), jobs.end(), taken));
    const double opt1 = brute_force_opt(inst);
    const double opt2 = speeds.empty() ? 0.0 : brute_force_opt(validate_instance(speeds, jobs));
    CHECK(opt1 - opt2 <= d.delta + 1e-9);
  }
}

TEST_CASE("normalize_jobs anchors the maximum at c") {
  const auto jobs = normalize_jobs({1.0, 3.0, 2.0, 4.0}, 3.55829);
  CHECK(jobs[3] == 3.55829);
  CHECK(jobs[1] == doctest::Approx(3.0 * 3.55829 / 4.0));
  CHECK(*std::max_element(jobs.begin(), jobs.end()) == 3.55829);
  CHECK(normalize_jobs({}, 2.0).empty());
}

TEST_CASE("local maxima and m_s") {
  const LocalMaxima lm = local_maxima_ms({1.0, 3.0, 2.0, 4.0}, 4.0);
  CHECK(lm.maxima == std::vector<double>{1.0, 3.0, 4.0});
  CHECK(lm.u0 == 3.0);
  CHECK(lm.m_s(3.0) == 4.0);
  CHECK(lm.m_s(4.0) == 0.0);

  // empty-range convention: nothing inside (y, cy]
  const LocalMaxima tight = local_maxima_ms({1.0, 3.0, 4.0}, 1.05);
  CHECK(tight.m_s(1.0) == 0.0);
}

TEST_CASE("u0 of a normalized sequence lies in (1, c]") {
  std::mt19937_64 rng(2025);
  std::uniform_real_distribution<double> cs(1.5, 6.0);
  for (int it = 0; it < 300; ++it) {
    const Instance inst = testutil::random_instance(rng, 3, 12, 1);
    const double c = cs(rng);
    const LocalMaxima lm = local_maxima_ms(normalize_jobs(inst.jobs, c), c);
    CHECK(lm.u0 > 1.0);
    CHECK(lm.u0 <= c);
  }
}

TEST_CASE("delta recursion: single machine is exact") {
  const Instance inst = validate_instance({2.0}, {1.0, 5.0, 3.0});
  const DeltaRecursionReport rep = verify_delta_recursion(inst, 2.0, {1.0});
  REQUIRE(rep.deltas.size() == 1);
  CHECK(rep.opt_values[0] == doctest::Approx(10.0));
  CHECK(rep.max_step_violation <= 1e-9);
  CHECK(rep.sum_violation <= 1e-9);
}

TEST_CASE("delta recursion on the worked two-machine instance") {
  const Instance inst = validate_instance({1.0, 0.5}, {4.0, 3.0});
  const DeltaRecursionReport rep = verify_delta_recursion(inst, 2.0, {1.0, 1.0}, brute_force_opt);
  CHECK(rep.max_step_violation <= 1e-9);
  CHECK(rep.sum_violation <= 1e-9);
}

TEST_CASE("delta recursion holds on random instances with the exhaustive oracle") {
  std::mt19937_64 rng(1234);
  std::uniform_real_distribution<double> cs(1.5, 6.0);
  std::uniform_real_distribution<double> xs(1e-9, 1.0);
  for (int it = 0; it < 150; ++it) {
    const Instance inst = testutil::random_instance(rng, 6, 6);
    std::vector<double> x(inst.machines());
    for (double& v : x) v = xs(rng);
    const DeltaRecursionReport rep = verify_delta_recursion(inst, cs(rng), x, brute_force_opt);
    CHECK(rep.max_step_violation <= 1e-9);
    CHECK(rep.sum_violation <= 1e-9);
  }
}

TEST_CASE("delta recursion replay agrees with the interval runner") {
  std::mt19937_64 rng(4321);
  std::uniform_real_distribution<double> cs(1.5, 6.0);
  for (int it = 0; it < 150; ++it) {
    const Instance inst = testutil::random_instance(rng, 6, 10);
    const double c = cs(rng);
    const std::vector<double> x = draw_interval_x(inst.machines(), 99, static_cast<std::uint64_t>(it));
    const DeltaRecursionReport rep = verify_delta_recursion(inst, c, x);
    const RunResult run = run_interval(inst, IntervalParams{c, x});
    REQUIRE(rep.profits.size() == inst.machines());
    for (std::size_t pos = 0; pos < inst.machines(); ++pos)
      CHECK(rep.profits[pos] == run.trace.profit[inst.order[pos]]);
  }
}

TEST_CASE("ratio-all1 certification") {
  CHECK(verify_ratio_all1(3.55829, 10000) <= 1e-9);
  CHECK(verify_ratio_all1(kE, 10000) <= 1e-9);
  CHECK(verify_ratio_all1(6.0, 10000) <= 1e-9);

  // u0 = 1 reduces to alpha (beta + c) <= c - 1
  for (double c : {kE, 3.55829, 5.0}) {
    const double beta = c * std::log(c) / (c - 1.0) - 1.0;
    CHECK(h_of_c(c) * (beta + c) <= c - 1.0 + 1e-9);
  }
  // u0 = c endpoint: RHS ln c equals c ln c
  for (double c : {kE, 3.55829, 6.0}) {
    const double lhs = h_of_c(c) * (c * c / (c - 1.0));
    CHECK(lhs <= c + 1e-9);
  }
}

TEST_CASE("f(t) = c t + (c - c^t)/ln c peaks at t = 1") {
  for (double c : {kE, 3.0, 3.55829, 4.5, 6.0}) CHECK(max_ft_violation(c, 1000) <= 1e-9);
}

}  // TEST_SUITE
