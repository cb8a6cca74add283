#pragma once

#include "tropirange/maxcore.hpp"

#include <cstdint>
#include <vector>

// The set X_{n×k} of n×k nonnegative matrices with X^t ⊗ X = I_k. Columns
// have pairwise disjoint supports, entries lie in [0,1], and every column
// attains the value 1 on some row owned by it alone; consequently X contains
// a k×k permutation submatrix, and X_{n×n} is exactly the permutation group.

namespace tropirange {

/// A validated element of X_{n×k}. Instances can only be produced by the
/// factory functions below, so the structural invariants always hold.
class Isometry {
 public:
  const Matrix& matrix() const { return m_; }
  Index rows() const { return m_.rows(); }
  Index cols() const { return m_.cols(); }

  /// For each column, the rows where the column holds an exact 1.
  const std::vector<std::vector<Index>>& anchors() const { return anchors_; }

 private:
  Isometry(Matrix m, std::vector<std::vector<Index>> anchors)
      : m_(std::move(m)), anchors_(std::move(anchors)) {}

  friend Isometry validate_isometry(const Eigen::Ref<const Matrix>& m);

  Matrix m_;
  std::vector<std::vector<Index>> anchors_;
};

/// Checks all structural properties with exact comparisons (anchors are exact
/// 1s, overlaps are exact zeros) and returns the wrapped value. Throws
/// std::invalid_argument naming the violated property and offending indices
/// (1-based in messages).
Isometry validate_isometry(const Eigen::Ref<const Matrix>& m);

/// X whose i-th column is e_{rows[i]} (0-based row indices, distinct).
Isometry canonical_embedding(Index n, const std::vector<Index>& rows);

/// f_A(X) = tr⊗(X^t ⊗ A ⊗ X).
double f_A(const Eigen::Ref<const Matrix>& a, const Isometry& x);

/// Structured random element: k disjoint anchor rows chosen uniformly, the
/// remaining rows assigned to a column or left zero uniformly, support
/// magnitudes uniform on [0,1). Deterministic in the seed. The distribution
/// is fixed for reproducible property sweeps; it is not uniform on X_{n×k}
/// in any measure-theoretic sense.
Isometry sample_isometry(Index n, Index k, std::uint64_t seed);

struct LipschitzGap {
  double lhs;  // |f_A(X) - f_A(Y)|
  double rhs;  // ‖A‖·‖X⊗X^t − Y⊗Y^t‖
};

/// Both sides of the Lipschitz bound on f_A, for property tests. The outer
/// bound ‖A‖(‖X‖+‖Y‖)‖X−Y‖ dominates rhs.
LipschitzGap lipschitz_gap(const Eigen::Ref<const Matrix>& a, const Isometry& x,
                           const Isometry& y);

}  // namespace tropirange
