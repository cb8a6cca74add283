#pragma once

#include "tropirange/maxcore.hpp"
#include "tropirange/report.hpp"

#include <vector>

// Max c- and C-numerical ranges over the permutation group:
// W^c_max(A) = {⊕_i c_i a_{σ(i),σ(i)} : σ ∈ S_n} and
// W^C_max(A) = {tr⊗(C ⊗ X^t ⊗ A ⊗ X) : X ∈ U_n}. Both are finite value sets
// computed exactly by enumerating S_n up to the brute-force cap.

namespace tropirange {

inline constexpr Index kDefaultCRangeCap = 9;

/// conv⊗(M) = [min M, max M] for a finite nonempty M ⊆ ℝ₊.
Interval conv_max(const std::vector<double>& values);

/// Exact value set over all n! permutations, deduplicated (relative 1e-9),
/// ascending.
std::vector<double> w_max_c(const Eigen::Ref<const Matrix>& a, const Vector& c,
                            Index cap = kDefaultCRangeCap);

Interval w_max_c_hull(const Eigen::Ref<const Matrix>& a, const Vector& c,
                      Index cap = kDefaultCRangeCap);

/// Matrix-C variant; diagonal C reduces to w_max_c of its diagonal.
std::vector<double> w_max_C(const Eigen::Ref<const Matrix>& a,
                            const Eigen::Ref<const Matrix>& c_mat,
                            Index cap = kDefaultCRangeCap);

/// {u ⊕ v : u ∈ s, v ∈ t}, deduplicated, ascending.
std::vector<double> set_oplus(const std::vector<double>& s, const std::vector<double>& t);

bool set_eq_tol(const std::vector<double>& s, const std::vector<double>& t);
bool subset_tol(const std::vector<double>& s, const std::vector<double>& t);

/// Structural laws of W^C_max as exact set identities: scale-shift, the two
/// ⊕-subadditivity inclusions, conjugation invariance, the transpose law for
/// symmetric C, the αI closed form and the A↔C symmetry.
LawReport c_range_law_suite(const Eigen::Ref<const Matrix>& a, const Eigen::Ref<const Matrix>& b,
                            const Eigen::Ref<const Matrix>& c_mat,
                            const Eigen::Ref<const Matrix>& d_mat, double alpha, double beta,
                            Index cap = kDefaultCRangeCap);

}  // namespace tropirange
