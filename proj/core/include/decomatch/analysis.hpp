#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "decomatch/instance.hpp"

namespace decomatch {

// ---------------------------------------------------------------------------
// Closed-form bound machinery.

// Principal branch of the Lambert W function (inverse of x e^x), for
// x >= -1/e. Halley iteration with residual |w e^w - x| <= 1e-12 * max(1,|x|).
double lambert_w0(double x);

// h(c) = 1 - W(beta e^beta / c) / beta with beta = c ln(c)/(c-1) - 1.
// Guards c <= 1 + 1e-9 (beta -> 0 there).
double h_of_c(double c);

// The competitive bound min((c-1)/(c ln c), h(c)). Defined for c >= e;
// pass allow_below_e to explore smaller bases.
double bound_of_c(double c, bool allow_below_e = false);

struct CStarResult {
  double cstar = 0.0;
  double bound = 0.0;
};

// Maximizes bound_of_c over [lo, hi] to within tol: golden-section search,
// then bisection on the branch crossing (c-1)/(c ln c) = h(c). Throws
// errc::no_maximum_in_range when the bound is monotone on the range.
CStarResult find_cstar(double lo, double hi, double tol);

// ---------------------------------------------------------------------------
// Structural machinery for the recursive analysis.

// Non-decreasing step function y -> speed of the machine that holds the
// largest job <= y in the offline optimum (0 if there is no such job or it is
// unmatched). Duplicate sizes keep the fastest holder.
struct SpeedProfile {
  std::vector<double> sizes;   // ascending breakpoints
  std::vector<double> speeds;  // parallel to sizes

  double operator()(double y) const;
};

SpeedProfile speed_profile(const Instance& inst);

// The bound Delta on OPT_1 - OPT_2 computed from the jobs the fastest machine
// accepted:  Delta = s1 * Wmax - s(w) * (Wmax - w) + sum_k w_k * s(w_k),
// where w > w_1 > w_2 > ... are those jobs and s is the speed profile.
// An empty trace degenerates to Delta = s1 * Wmax.
struct DeltaBreakdown {
  double top = 0.0;          // w (0 when the trace is empty)
  std::vector<double> rest;  // w_1, w_2, ... descending
  double delta = 0.0;
};

DeltaBreakdown delta_first_machine(const Instance& inst, std::vector<double> fastest_trace);

// Scale jobs so the largest equals c exactly.
std::vector<double> normalize_jobs(std::vector<double> jobs, double c);

// Local maxima of an arrival sequence: jobs larger than everything before
// them. m_s(y) is the minimum local maximum in (y, c*y], or 0 if none; on a
// normalized sequence u0 = m_s(1) lies in (1, c].
struct LocalMaxima {
  std::vector<double> maxima;  // strictly increasing
  double c = 0.0;
  double u0 = 0.0;

  double m_s(double y) const;
};

LocalMaxima local_maxima_ms(const std::vector<double>& jobs, double c);

// ---------------------------------------------------------------------------
// Numeric certification of the analysis inequalities.

struct DeltaRecursionReport {
  std::vector<double> opt_values;  // OPT_i for the subinstance seen by machine i
  std::vector<double> deltas;      // Delta_i from machine i's accepted jobs
  std::vector<double> profits;     // A_i = speed_i * credited_i
  double max_step_violation = 0.0;  // max_i (OPT_i - OPT_{i+1} - Delta_i)
  double sum_violation = 0.0;       // OPT_1 - sum_i Delta_i
};

using OptOracle = std::function<double(const Instance&)>;

// Replays the deterministic interval run for (c, x) and, for every machine i
// in fastest-first order, forms the subinstance of machines i.. and the jobs
// declined by machines before i, then checks OPT_i - OPT_{i+1} <= Delta_i and
// sum_i Delta_i >= OPT_1 (OPT_{n+1} = 0). `opt` overrides the OPT computation
// (e.g. with brute_force_opt); sorted_opt is used when empty.
DeltaRecursionReport verify_delta_recursion(const Instance& inst, double c,
                                            const std::vector<double>& x,
                                            const OptOracle& opt = {});

// Max over a uniform u0 grid on [1, c] of LHS - RHS of
//   alpha * (u0 c/(c-1) + (c-u0)/ln c) <= (c - u0 + u0 ln u0)/ln c
// with alpha = h(c). Non-positive up to rounding when the bound is sound.
double verify_ratio_all1(double c, std::size_t grid_size = 10000);

// Max over a uniform t grid on [0, 1] of f(t) - f(1) for
// f(t) = c t + (c - c^t)/ln c; the claim is that t = 1 maximizes f.
double max_ft_violation(double c, std::size_t grid_size = 1000);

}  // namespace decomatch
