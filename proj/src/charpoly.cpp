#include "tropirange/charpoly.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace tropirange {

namespace {

void require_cap(Index n, Index cap, const char* op) {
  if (n > cap)
    throw std::invalid_argument(std::string(op) + ": n = " + std::to_string(n) +
                                " exceeds the brute-force cap " + std::to_string(cap) +
                                "; raise it with --cap (or TROPIRANGE_CAP) if you mean it");
}

// Max permanent of the principal submatrix on `rows` (ascending). Each
// diagonal product goes through sorted_product so the value only depends on
// the selected entry multiset, not on the labeling.
double permanent_on(const Eigen::Ref<const Matrix>& a, const std::vector<Index>& rows) {
  std::vector<Index> perm = rows;
  std::sort(perm.begin(), perm.end());
  std::vector<double> factors(rows.size());
  double best = 0.0;
  do {
    for (std::size_t i = 0; i < rows.size(); ++i) factors[i] = a(rows[i], perm[i]);
    best = std::max(best, sorted_product(factors));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

double max_permanent(const Eigen::Ref<const Matrix>& a, Index cap) {
  require_square(a, "max_permanent");
  require_max_matrix(a, "max_permanent");
  require_cap(a.rows(), cap, "max_permanent");
  std::vector<Index> all(static_cast<std::size_t>(a.rows()));
  std::iota(all.begin(), all.end(), Index{0});
  return permanent_on(a, all);
}

std::vector<double> delta_coefficients(const Eigen::Ref<const Matrix>& a, Index cap) {
  require_square(a, "delta_coefficients");
  require_max_matrix(a, "delta_coefficients");
  require_cap(a.rows(), cap, "delta_coefficients");
  const Index n = a.rows();
  std::vector<double> deltas(static_cast<std::size_t>(n + 1), 0.0);
  deltas[0] = 1.0;
  for (Index k = 1; k <= n; ++k) {
    // all k-subsets of {0..n-1}
    std::vector<Index> subset(static_cast<std::size_t>(k));
    std::iota(subset.begin(), subset.end(), Index{0});
    double best = 0.0;
    while (true) {
      best = std::max(best, permanent_on(a, subset));
      Index i = k - 1;
      while (i >= 0 && subset[static_cast<std::size_t>(i)] == n - k + i) --i;
      if (i < 0) break;
      ++subset[static_cast<std::size_t>(i)];
      for (Index j = i + 1; j < k; ++j)
        subset[static_cast<std::size_t>(j)] = subset[static_cast<std::size_t>(j - 1)] + 1;
    }
    deltas[static_cast<std::size_t>(k)] = best;
  }
  return deltas;
}

std::vector<bool> essential_flags(const std::vector<double>& deltas) {
  if (deltas.empty() || deltas.front() != 1.0)
    throw std::invalid_argument("essential_flags: deltas must start with delta_0 = 1");
  const Index n = static_cast<Index>(deltas.size()) - 1;

  // Upper concave hull of (n-i, log delta_i) over positive coefficients,
  // scanned with x ascending (i descending). Points within 1e-12 of a hull
  // edge in log space are interior, hence inessential.
  struct Pt {
    double x, y;
    Index i;
  };
  std::vector<Pt> pts;
  for (Index i = n; i >= 0; --i)
    if (deltas[static_cast<std::size_t>(i)] > 0.0)
      pts.push_back({static_cast<double>(n - i), std::log(deltas[static_cast<std::size_t>(i)]), i});

  constexpr double kCollinearTol = 1e-12;
  std::vector<Pt> hull;
  for (const Pt& c : pts) {
    while (hull.size() >= 2) {
      const Pt& a = hull[hull.size() - 2];
      const Pt& b = hull.back();
      const double lift = (c.y - a.y) / (c.x - a.x) * (b.x - a.x) + a.y;
      if (b.y - lift <= kCollinearTol)
        hull.pop_back();
      else
        break;
    }
    hull.push_back(c);
  }

  std::vector<bool> flags(deltas.size(), false);
  for (const Pt& p : hull) flags[static_cast<std::size_t>(p.i)] = true;
  return flags;
}

Spectrum tropical_roots(const std::vector<double>& deltas, const std::vector<bool>& essential) {
  if (deltas.size() != essential.size())
    throw std::invalid_argument("tropical_roots: deltas and flags disagree in length");
  const Index n = static_cast<Index>(deltas.size()) - 1;
  Spectrum s;
  s.kind = Spectrum::Kind::tropical;
  Index prev = 0;
  for (Index i = 1; i <= n; ++i) {
    if (!essential[static_cast<std::size_t>(i)]) continue;
    const Index gap = i - prev;
    const double root =
        kth_root(deltas[static_cast<std::size_t>(i)] / deltas[static_cast<std::size_t>(prev)], gap);
    s.values.emplace_back(root, static_cast<int>(gap));
    prev = i;
  }
  if (prev < n) s.values.emplace_back(0.0, static_cast<int>(n - prev));
  for (std::size_t i = 1; i < s.values.size(); ++i)
    if (!(s.values[i - 1].first > s.values[i].first))
      throw std::logic_error("tropical_roots: roots are not strictly decreasing");
  return s;
}

double charpoly_eval(const std::vector<double>& deltas, double x) {
  if (x < 0.0) throw std::invalid_argument("charpoly_eval: x must be nonnegative");
  const Index n = static_cast<Index>(deltas.size()) - 1;
  double best = 0.0;
  for (Index i = 0; i <= n; ++i)
    best = std::max(best, deltas[static_cast<std::size_t>(i)] *
                              std::pow(x, static_cast<double>(n - i)));
  return best;
}

MaxPolynomial characteristic_maxpolynomial(const Eigen::Ref<const Matrix>& a, Index cap) {
  MaxPolynomial p;
  p.deltas = delta_coefficients(a, cap);
  p.essential = essential_flags(p.deltas);
  p.roots = tropical_roots(p.deltas, p.essential);
  Index last = 0;
  for (Index i = 0; i < static_cast<Index>(p.essential.size()); ++i)
    if (p.essential[static_cast<std::size_t>(i)]) last = i;
  p.zero_mult = static_cast<Index>(p.deltas.size()) - 1 - last;
  return p;
}

std::vector<double> sigma_trop_k(const Eigen::Ref<const Matrix>& a, Index k, Index cap) {
  const MaxPolynomial p = characteristic_maxpolynomial(a, cap);
  return k_subset_max_values(p.roots, k);
}

LawReport diagonal_bound_check(const Eigen::Ref<const Matrix>& a, Index cap) {
  require_square(a, "diagonal_bound_check");
  const Index n = a.rows();
  for (Index i = 1; i < n; ++i)
    if (a(i - 1, i - 1) > a(i, i))
      throw std::invalid_argument("diagonal_bound_check: diagonal must be ascending");

  const std::vector<double> deltas = delta_coefficients(a, cap);
  const std::vector<bool> essential = essential_flags(deltas);

  LawReport rep;
  Index prev = 0;
  for (Index i = 1; i <= n; ++i) {
    if (!essential[static_cast<std::size_t>(i)]) continue;
    const double ratio_root =
        kth_root(deltas[static_cast<std::size_t>(i)] / deltas[static_cast<std::size_t>(prev)],
                 i - prev);
    const double diag = a(n - prev - 1, n - prev - 1);
    const bool ok = leq_tol(diag, ratio_root);
    std::ostringstream name;
    name << "root(" << prev << "->" << i << ") >= a[" << (n - prev) << "][" << (n - prev) << "]";
    std::ostringstream detail;
    if (!ok) detail << ratio_root << " < " << diag;
    rep.add(name.str(), ok, detail.str());
    prev = i;
  }
  return rep;
}

}  // namespace tropirange
