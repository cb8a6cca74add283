#pragma once

#include "tropirange/maxcore.hpp"

#include <cstdint>
#include <utility>
#include <vector>

// Independent brute-force references for the acceptance suite. These share
// no enumeration logic with the production paths they cross-check; they are
// deliberately naive.

namespace tropirange::oracles {

/// Max permanent by recursive enumeration of all n! permutations.
double oracle_permanent(const Eigen::Ref<const Matrix>& a);

/// Maximum cycle geometric mean by DFS enumeration of every simple cycle.
double oracle_cycles_mu(const Eigen::Ref<const Matrix>& a);

/// ‖A^m ⊗ e_j‖^{1/m} via normalized power iteration (j is 0-based). An
/// asymptotic estimate of the local spectral radius; callers compare at
/// m = 4n² within 5e-2 relative.
double oracle_power_radius(const Eigen::Ref<const Matrix>& a, Index j, Index m);

struct RangeSample {
  double min_f;
  double max_f;
};

/// Min and max of f_A over `trials` sampled isometries, with f evaluated by
/// a local quadratic-form double loop.
RangeSample oracle_range_sampler(const Eigen::Ref<const Matrix>& a, Index k, int trials,
                                 std::uint64_t seed);

/// Tropical-root estimates from the slope breaks of x ↦ ⊕_i δ_i x^{n-i} on a
/// log grid: (root estimate, slope drop = multiplicity) pairs, descending.
/// Estimates land within one grid step of the true break.
std::vector<std::pair<double, int>> oracle_slope_roots(const std::vector<double>& deltas,
                                                       int grid_points);

/// Max permanent via a min-cost assignment on negated log weights
/// (Hungarian algorithm); the log-space counterpart of oracle_permanent.
double oracle_assignment_permanent(const Eigen::Ref<const Matrix>& a);

}  // namespace tropirange::oracles
