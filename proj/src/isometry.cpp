#include "tropirange/isometry.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace tropirange {

Isometry validate_isometry(const Eigen::Ref<const Matrix>& m) {
  const Index n = m.rows(), k = m.cols();
  if (n < 1 || k < 1) throw std::invalid_argument("isometry: dimensions must be at least 1");
  if (k > n)
    throw std::invalid_argument("isometry: k = " + std::to_string(k) +
                                " columns exceed n = " + std::to_string(n) + " rows");

  // (ii) entries in [0,1]
  for (Index j = 0; j < k; ++j)
    for (Index i = 0; i < n; ++i) {
      const double v = m(i, j);
      if (!std::isfinite(v) || v < 0.0 || v > 1.0)
        throw std::invalid_argument("isometry: entry (" + std::to_string(i + 1) + "," +
                                    std::to_string(j + 1) + ") = " + std::to_string(v) +
                                    " outside [0,1]");
    }

  // (i) disjoint column supports
  for (Index i = 0; i < n; ++i) {
    Index owner = -1;
    for (Index j = 0; j < k; ++j) {
      if (m(i, j) == 0.0) continue;
      if (owner >= 0)
        throw std::invalid_argument("isometry: columns " + std::to_string(owner + 1) + "," +
                                    std::to_string(j + 1) + " overlap at row " +
                                    std::to_string(i + 1));
      owner = j;
    }
  }

  // column max exactly 1, and (iii) an anchor row owned by the column alone
  // (ownership already follows from disjoint supports)
  std::vector<std::vector<Index>> anchors(static_cast<std::size_t>(k));
  for (Index j = 0; j < k; ++j) {
    for (Index i = 0; i < n; ++i)
      if (m(i, j) == 1.0) anchors[static_cast<std::size_t>(j)].push_back(i);
    if (anchors[static_cast<std::size_t>(j)].empty())
      throw std::invalid_argument("isometry: column " + std::to_string(j + 1) +
                                  " has no entry equal to 1");
  }

  // (iv) the anchor rows provide a k×k permutation submatrix; with disjoint
  // supports the first anchors of distinct columns are automatically distinct,
  // assert it anyway.
  std::vector<Index> first(static_cast<std::size_t>(k));
  for (Index j = 0; j < k; ++j) first[static_cast<std::size_t>(j)] = anchors[static_cast<std::size_t>(j)].front();
  std::sort(first.begin(), first.end());
  if (std::adjacent_find(first.begin(), first.end()) != first.end())
    throw std::invalid_argument("isometry: anchor rows are not distinct");

  return Isometry(m, std::move(anchors));
}

Isometry canonical_embedding(Index n, const std::vector<Index>& rows) {
  if (rows.empty()) throw std::invalid_argument("canonical_embedding: need at least one index");
  Matrix m = Matrix::Zero(n, static_cast<Index>(rows.size()));
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  for (std::size_t j = 0; j < rows.size(); ++j) {
    const Index r = rows[j];
    if (r < 0 || r >= n)
      throw std::invalid_argument("canonical_embedding: row index " + std::to_string(r) +
                                  " out of range for n = " + std::to_string(n));
    if (used[static_cast<std::size_t>(r)])
      throw std::invalid_argument("canonical_embedding: duplicate row index " + std::to_string(r));
    used[static_cast<std::size_t>(r)] = true;
    m(r, static_cast<Index>(j)) = 1.0;
  }
  return validate_isometry(m);
}

double f_A(const Eigen::Ref<const Matrix>& a, const Isometry& x) {
  require_square(a, "f_A");
  if (a.rows() != x.rows())
    throw std::invalid_argument("f_A: matrix is " + std::to_string(a.rows()) + "x" +
                                std::to_string(a.cols()) + " but isometry has " +
                                std::to_string(x.rows()) + " rows");
  return trace_max(max_mul(max_mul(x.matrix().transpose(), a), x.matrix()));
}

Isometry sample_isometry(Index n, Index k, std::uint64_t seed) {
  if (k < 1) throw std::invalid_argument("sample_isometry: k must be at least 1");
  if (k > n)
    throw std::invalid_argument("sample_isometry: k = " + std::to_string(k) +
                                " exceeds n = " + std::to_string(n));
  std::mt19937_64 rng(seed);
  std::vector<Index> rows(static_cast<std::size_t>(n));
  std::iota(rows.begin(), rows.end(), Index{0});
  std::shuffle(rows.begin(), rows.end(), rng);

  Matrix m = Matrix::Zero(n, k);
  for (Index j = 0; j < k; ++j) m(rows[static_cast<std::size_t>(j)], j) = 1.0;

  std::uniform_int_distribution<Index> col(0, k);  // k means "leave zero"
  std::uniform_real_distribution<double> mag(0.0, 1.0);
  for (Index t = k; t < n; ++t) {
    const Index c = col(rng);
    if (c == k) continue;
    m(rows[static_cast<std::size_t>(t)], c) = mag(rng);
  }
  return validate_isometry(m);
}

LipschitzGap lipschitz_gap(const Eigen::Ref<const Matrix>& a, const Isometry& x,
                           const Isometry& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols())
    throw std::invalid_argument("lipschitz_gap: isometry shapes disagree");
  if (a.rows() != x.rows()) throw std::invalid_argument("lipschitz_gap: matrix size mismatch");
  const double lhs = std::abs(f_A(a, x) - f_A(a, y));
  const Matrix gram_x = max_mul(x.matrix(), x.matrix().transpose());
  const Matrix gram_y = max_mul(y.matrix(), y.matrix().transpose());
  const double rhs = norm_max(a) * norm_max(gram_x - gram_y);
  return {lhs, rhs};
}

}  // namespace tropirange
