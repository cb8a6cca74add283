#pragma once

#include "tropirange/maxcore.hpp"
#include "tropirange/report.hpp"
#include "tropirange/spectra.hpp"

#include <vector>

// Characteristic maxpolynomial X_A(x) = perm(xI ⊕ A) = ⊕_k δ_k x^{n-k} with
// δ_k the largest max permanent of a principal k×k submatrix. Its tropical
// roots (slope breaks of x ↦ X_A(x)) are the algebraic max eigenvalues; the
// essential coefficients are the vertices of the upper concave hull of the
// points (n-k, log δ_k).

namespace tropirange {

inline constexpr Index kDefaultCharpolyCap = 10;

/// perm(A) = max over permutations of the diagonal product. Enumerates all
/// n! permutations, so n is capped (override via `cap`).
double max_permanent(const Eigen::Ref<const Matrix>& a, Index cap = kDefaultCharpolyCap);

/// δ_0..δ_n with δ_0 = 1 and δ_k the max permanent over all principal k×k
/// submatrices.
std::vector<double> delta_coefficients(const Eigen::Ref<const Matrix>& a,
                                       Index cap = kDefaultCharpolyCap);

/// essential[i] ⇔ δ_i > 0 and (n-i, log δ_i) is a strict vertex of the upper
/// concave hull; points on the interior of a hull edge (collinear within
/// 1e-12 in log space) are inessential, matching the ≤-for-all-x definition.
std::vector<bool> essential_flags(const std::vector<double>& deltas);

/// Tropical roots with algebraic multiplicities from consecutive essential
/// coefficients, plus the zero root when the last essential index is < n.
/// Multiplicities sum to n and the values are strictly decreasing.
Spectrum tropical_roots(const std::vector<double>& deltas, const std::vector<bool>& essential);

/// ⊕_i δ_i x^{n-i}.
double charpoly_eval(const std::vector<double>& deltas, double x);

struct MaxPolynomial {
  std::vector<double> deltas;
  std::vector<bool> essential;
  Spectrum roots;   // tropical, includes the zero root when present
  Index zero_mult;  // n - (last essential index)
};

MaxPolynomial characteristic_maxpolynomial(const Eigen::Ref<const Matrix>& a,
                                           Index cap = kDefaultCharpolyCap);

/// k-tropical max spectrum: distinct k-subset maxima of the root list.
std::vector<double> sigma_trop_k(const Eigen::Ref<const Matrix>& a, Index k,
                                 Index cap = kDefaultCharpolyCap);

/// For a matrix with ascending diagonal, checks
/// (δ_{i_m}/δ_{i_{m-1}})^{1/(i_m-i_{m-1})} ≥ a_{n-i_{m-1},n-i_{m-1}} for each
/// consecutive essential pair.
LawReport diagonal_bound_check(const Eigen::Ref<const Matrix>& a,
                               Index cap = kDefaultCharpolyCap);

}  // namespace tropirange
