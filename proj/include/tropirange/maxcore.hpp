#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

// Max-times semiring kernel: a ⊕ b = max(a, b), a ⊗ b = a·b on nonnegative
// reals. Matrices are plain Eigen::MatrixXd values; every operation returns a
// fresh matrix and never mutates its arguments, so values are safe to share
// across threads.

namespace tropirange {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

// Comparison convention for closed-form checks: relative 1e-9 with absolute
// floor 1e-12. Entries only ever get multiplied, so the error budget is a few
// ulp per product.
inline constexpr double kRelTol = 1e-9;
inline constexpr double kAbsTol = 1e-12;

inline double cmp_tol(double a, double b) {
  return std::max(kAbsTol, kRelTol * std::max(std::abs(a), std::abs(b)));
}

inline bool approx_eq(double a, double b) { return std::abs(a - b) <= cmp_tol(a, b); }

/// a ≤ b up to the library comparison tolerance.
inline bool leq_tol(double a, double b) { return a <= b + cmp_tol(a, b); }

/// k-th root used for cycle geometric means and maxpolynomial roots.
/// k == 1 returns v unchanged so exact inputs survive exactly.
inline double kth_root(double v, Index k) {
  return k == 1 ? v : std::pow(v, 1.0 / static_cast<double>(k));
}

/// Product of a factor multiset, evaluated in ascending value order. Floating
/// multiplication is not associative, so fixing the order makes equal
/// multisets multiply identically regardless of traversal or relabeling;
/// permanents, cycle means and maxpolynomial roots all route through this.
double sorted_product(std::vector<double> factors);

/// Throws std::invalid_argument unless `a` is a nonempty matrix of finite
/// nonnegative entries. All constructors of max-algebra values (parser,
/// generator, CLI inputs) go through this gate.
void require_max_matrix(const Eigen::Ref<const Matrix>& a, const char* what = "matrix");

void require_square(const Eigen::Ref<const Matrix>& a, const char* op);

/// Permutation of {0..n-1}. operator()(i) is the image of i.
class Permutation {
 public:
  explicit Permutation(std::vector<Index> images);
  static Permutation identity(Index n);

  Index size() const { return static_cast<Index>(images_.size()); }
  Index operator()(Index i) const { return images_[static_cast<std::size_t>(i)]; }
  const std::vector<Index>& images() const { return images_; }

  Permutation inverse() const;

  /// Permutation matrix P with column i equal to e_{sigma(i)}, so that
  /// (P^t ⊗ A ⊗ P)(i, j) = a_{sigma(i), sigma(j)}.
  Matrix to_matrix() const;

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<Index> images_;
};

/// Closed interval [lo, hi] ⊆ ℝ₊; lo == hi encodes a singleton.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  bool is_singleton() const { return lo == hi; }
  bool contains(double z) const { return z >= lo - cmp_tol(z, lo) && z <= hi + cmp_tol(z, hi); }
  bool contains(const Interval& inner) const {
    return leq_tol(lo, inner.lo) && leq_tol(inner.hi, hi);
  }
};

// --- Semiring operations ----------------------------------------------------

/// (A ⊗ B)(i,j) = max_k a_ik · b_kj.
Matrix max_mul(const Eigen::Ref<const Matrix>& a, const Eigen::Ref<const Matrix>& b);

/// Entrywise maximum; shapes must agree.
Matrix max_add(const Eigen::Ref<const Matrix>& a, const Eigen::Ref<const Matrix>& b);

/// k-fold ⊗ power of a square matrix. k == 0 returns the identity.
Matrix max_pow(const Eigen::Ref<const Matrix>& a, Index k);

/// tr⊗(A) = max_i a_ii.
double trace_max(const Eigen::Ref<const Matrix>& a);

/// ‖A‖ = max_ij |a_ij|. Accepts signed matrices (differences of max
/// matrices); for nonnegative input this is just the largest entry.
double norm_max(const Eigen::Ref<const Matrix>& a);

/// P^t ⊗ A ⊗ P for the matrix P of sigma; entry (i,j) = a_{sigma(i), sigma(j)}.
Matrix conjugate_by_permutation(const Eigen::Ref<const Matrix>& a, const Permutation& sigma);

/// sigma such that conjugating A by sigma yields a nondecreasing diagonal.
/// Ties break stably by original index so witnesses are reproducible.
Permutation sort_diagonal_permutation(const Eigen::Ref<const Matrix>& a);

// --- Matrix text format -----------------------------------------------------
//
// One row per line, whitespace- or comma-separated decimal literals, with an
// optional leading header line "# rows cols". Negative or non-finite entries
// are rejected.

Matrix parse_matrix(std::istream& in);
Matrix parse_matrix_string(const std::string& text);
Matrix parse_matrix_file(const std::string& path);

std::string format_matrix(const Eigen::Ref<const Matrix>& a);
void write_matrix_file(const std::string& path, const Eigen::Ref<const Matrix>& a);

}  // namespace tropirange
