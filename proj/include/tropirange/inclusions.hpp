#pragma once

#include "tropirange/maxcore.hpp"
#include "tropirange/report.hpp"

#include <cstdint>

// Cross-module checks: the max convex hulls of the k-geometric and
// k-tropical spectra sit inside the max k-numerical range for 1 ≤ k < n
// (the inclusion genuinely fails at k = n), plus the seeded law batch behind
// the `laws` CLI verb.

namespace tropirange {

/// conv⊗(σ_max^k(A)) ⊆ W^k_max(A) and conv⊗(σ_trop^k(A)) ⊆ W^k_max(A) for
/// one k. Callers pick k; at k = n the report legitimately flags failures.
LawReport spectral_inclusion_report(const Eigen::Ref<const Matrix>& a, Index k,
                                    Index cap = 10);

/// Permutation-conjugation invariance of the maxpolynomial and both spectra,
/// root ordering, the extremal-ratio identities, the piecewise-evaluation
/// identity and the diagonal bounds, all on one matrix.
LawReport charpoly_spectra_invariants(const Eigen::Ref<const Matrix>& a, Index cap = 10);

struct BatchConfig {
  Index n = 5;
  int trials = 20;
  std::uint64_t seed = 1;
};

/// Random nonnegative matrix with the given nonzero density, entries uniform
/// on [0,10); optionally conjugated so the diagonal ascends.
Matrix gen_matrix(Index n, double density, std::uint64_t seed, bool sorted_diag);

/// Seeded batch aggregating the numerical-range and C-range law suites with
/// the charpoly/spectra invariants and the spectral inclusions.
LawReport run_law_batch(const BatchConfig& cfg);

}  // namespace tropirange
