#pragma once

#include "tropirange/isometry.hpp"
#include "tropirange/maxcore.hpp"
#include "tropirange/report.hpp"

// Max k-numerical range W^k_max(A) = {tr⊗(X^t ⊗ A ⊗ X) : X ∈ X_{n×k}}.
// For 1 ≤ k < n it is the closed interval [c, d] with c the k-th smallest
// diagonal entry and d = ‖A‖; for k = n it collapses to the singleton
// {tr⊗(A)}. Witnesses realizing any value of the range are constructed
// explicitly.

namespace tropirange {

/// W_max(A) = [min_i a_ii, max_ij a_ij].
Interval w_max(const Eigen::Ref<const Matrix>& a);

/// W^k_max(A); singleton {tr⊗(A)} when k = n.
Interval w_max_k(const Eigen::Ref<const Matrix>& a, Index k);

/// An X ∈ X_{n×k} with f_A(X) = z (up to 1e-9·max(1,z)). Throws
/// std::domain_error when z lies outside W^k_max(A).
Isometry witness_for(const Eigen::Ref<const Matrix>& a, Index k, double z);

/// Interval [max(lo1,lo2), max(hi1,hi2)] = {u ⊕ v : u ∈ s, v ∈ t}.
Interval interval_oplus(const Interval& s, const Interval& t);

/// {α·z ⊕ β : z ∈ s}.
Interval interval_scale_shift(const Interval& s, double alpha, double beta);

/// Checks the structural laws of W^k_max as interval identities on computed
/// ranges: scaling/shift, subadditivity of ⊕ (with equality at k = n),
/// permutation-conjugation invariance, principal-submatrix inclusion,
/// transpose invariance, and the nesting chain over k.
LawReport w_max_k_law_suite(const Eigen::Ref<const Matrix>& a, const Eigen::Ref<const Matrix>& b,
                            double alpha, double beta, Index k);

}  // namespace tropirange
