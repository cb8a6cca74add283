#include "tropirange/numrange.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace tropirange {

Interval w_max_k(const Eigen::Ref<const Matrix>& a, Index k) {
  require_square(a, "w_max_k");
  require_max_matrix(a, "w_max_k");
  const Index n = a.rows();
  if (k < 1 || k > n)
    throw std::invalid_argument("w_max_k: k = " + std::to_string(k) + " out of range 1.." +
                                std::to_string(n));
  if (k == n) {
    const double t = trace_max(a);
    return {t, t};
  }
  std::vector<double> diag(a.diagonal().data(), a.diagonal().data() + n);
  std::nth_element(diag.begin(), diag.begin() + (k - 1), diag.end());
  return {diag[static_cast<std::size_t>(k - 1)], norm_max(a)};
}

Interval w_max(const Eigen::Ref<const Matrix>& a) { return w_max_k(a, 1); }

namespace {

// Column fillings of the constructive witness, in the frame where the
// diagonal is ascending and the maximal entry sits at (r, s) with r <= s.
// Column 0 carries the tuned support; the remaining columns are standard
// basis vectors on `fill`.
struct WitnessPlan {
  std::vector<std::pair<Index, double>> column0;
  std::vector<Index> fill;
};

double tuned_magnitude(double z, double p, double att, double akk) {
  if (p <= akk) return std::sqrt(z / att);
  if (z <= p * p / att) return z / p;
  return std::sqrt(z / att);
}

WitnessPlan plan_witness(const Matrix& b, Index k, double z, double c, double d, Index r,
                         Index s) {
  const Index n = b.rows();
  WitnessPlan plan;
  auto fill_range = [&](Index lo, Index hi, std::initializer_list<Index> skip) {
    for (Index i = lo; i <= hi; ++i)
      if (std::find(skip.begin(), skip.end(), i) == skip.end()) plan.fill.push_back(i);
  };
  (void)n;
  if (s >= k) {
    // Case 1: the maximal entry lies beyond the first k rows/columns.
    const Index t = std::max(r, k - 1);
    if (z >= b(t, t)) {
      plan.column0 = {{r, 1.0}, {s, z / d}};
      if (r <= k - 1)
        fill_range(0, k - 1, {r});
      else
        fill_range(0, k - 2, {});
    } else {
      // Here t = r > k-1. The paper's filling anchors column 0 at row k-2;
      // for k = 1 that row does not exist and the anchor moves to row 0,
      // whose diagonal entry is the interval's lower endpoint.
      const Index anchor = k >= 2 ? k - 2 : 0;
      const double p = std::max(b(anchor, t), b(t, anchor));
      plan.column0 = {{anchor, 1.0}, {t, tuned_magnitude(z, p, b(t, t), c)}};
      if (k >= 2) {
        fill_range(0, k - 3, {});
        plan.fill.push_back(k - 1);
      }
    }
  } else {
    // Case 2: the maximal entry lies inside the leading k×k block (s <= k-1,
    // and row k exists because k < n).
    if (z >= b(k, k)) {
      plan.column0 = {{r, 1.0}, {s, z / d}};
      Index added = 0;
      for (Index i = 0; i <= k && added < k - 1; ++i) {
        if (i == r || i == s) continue;
        plan.fill.push_back(i);
        ++added;
      }
    } else {
      if (k < 2) throw std::logic_error("witness_for: unreachable subcase for k = 1");
      const double p = std::max(b(k - 2, k), b(k, k - 2));
      plan.column0 = {{k - 2, 1.0}, {k, tuned_magnitude(z, p, b(k, k), c)}};
      fill_range(0, k - 3, {});
      plan.fill.push_back(k - 1);
    }
  }
  return plan;
}

}  // namespace

Isometry witness_for(const Eigen::Ref<const Matrix>& a, Index k, double z) {
  require_square(a, "witness_for");
  require_max_matrix(a, "witness_for");
  const Index n = a.rows();
  if (k < 1 || k > n)
    throw std::invalid_argument("witness_for: k = " + std::to_string(k) + " out of range 1.." +
                                std::to_string(n));
  const Interval range = w_max_k(a, k);
  if (!range.contains(z)) {
    std::ostringstream msg;
    msg << "witness_for: z = " << z << " lies outside W^" << k << "_max(A) = ";
    if (range.is_singleton())
      msg << "{" << range.lo << "}";
    else
      msg << "[" << range.lo << ", " << range.hi << "]";
    throw std::domain_error(msg.str());
  }
  if (k == n) {
    // Any permutation matrix realizes the singleton value tr⊗(A).
    std::vector<Index> rows(static_cast<std::size_t>(n));
    std::iota(rows.begin(), rows.end(), Index{0});
    return canonical_embedding(n, rows);
  }
  const double zc = std::clamp(z, range.lo, range.hi);

  const Permutation sigma = sort_diagonal_permutation(a);
  Matrix b = conjugate_by_permutation(a, sigma);
  const Index nn = b.rows();

  Matrix xs = Matrix::Zero(nn, k);
  if (zc == range.lo) {
    // Lower endpoint: canonical embedding on the k smallest diagonal indices.
    // This also covers the zero matrix, where every division below would be
    // undefined.
    for (Index j = 0; j < k; ++j) xs(j, j) = 1.0;
  } else {
    const double d = range.hi;
    // Deterministic argmax: first row-major hit in the upper triangle; if the
    // maximum only occurs strictly below the diagonal, work with B^t. No undo
    // is needed on output since tr⊗(X^t⊗A⊗X) = tr⊗(X^t⊗A^t⊗X).
    Index r = -1, s = -1;
    for (Index i = 0; i < nn && r < 0; ++i)
      for (Index j = i; j < nn; ++j)
        if (b(i, j) == d) {
          r = i;
          s = j;
          break;
        }
    if (r < 0) {
      for (Index i = 0; i < nn && r < 0; ++i)
        for (Index j = 0; j < i; ++j)
          if (b(i, j) == d) {
            r = j;
            s = i;
            break;
          }
      b.transposeInPlace();
    }
    const WitnessPlan plan = plan_witness(b, k, zc, range.lo, d, r, s);
    for (const auto& [row, v] : plan.column0) xs(row, 0) = v;
    for (std::size_t j = 0; j < plan.fill.size(); ++j)
      xs(plan.fill[j], static_cast<Index>(j) + 1) = 1.0;
  }

  Matrix xo = Matrix::Zero(nn, k);
  for (Index m = 0; m < nn; ++m) xo.row(sigma(m)) = xs.row(m);
  Isometry witness = validate_isometry(xo);
  const double achieved = f_A(a, witness);
  if (std::abs(achieved - zc) > 1e-9 * std::max(1.0, zc))
    throw std::logic_error("witness_for: construction achieved " + std::to_string(achieved) +
                           " instead of " + std::to_string(zc));
  return witness;
}

Interval interval_oplus(const Interval& s, const Interval& t) {
  return {std::max(s.lo, t.lo), std::max(s.hi, t.hi)};
}

Interval interval_scale_shift(const Interval& s, double alpha, double beta) {
  return {std::max(alpha * s.lo, beta), std::max(alpha * s.hi, beta)};
}

namespace {

bool interval_eq(const Interval& x, const Interval& y) {
  return approx_eq(x.lo, y.lo) && approx_eq(x.hi, y.hi);
}

std::string show(const Interval& x) {
  std::ostringstream os;
  os << "[" << x.lo << ", " << x.hi << "]";
  return os.str();
}

std::vector<Permutation> probe_permutations(const Eigen::Ref<const Matrix>& a) {
  const Index n = a.rows();
  std::vector<Permutation> sigmas;
  sigmas.push_back(Permutation::identity(n));
  std::vector<Index> rev(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) rev[static_cast<std::size_t>(i)] = n - 1 - i;
  sigmas.emplace_back(std::move(rev));
  if (n > 1) {
    std::vector<Index> rot(static_cast<std::size_t>(n));
    for (Index i = 0; i < n; ++i) rot[static_cast<std::size_t>(i)] = (i + 1) % n;
    sigmas.emplace_back(std::move(rot));
  }
  sigmas.push_back(sort_diagonal_permutation(a));
  return sigmas;
}

}  // namespace

LawReport w_max_k_law_suite(const Eigen::Ref<const Matrix>& a, const Eigen::Ref<const Matrix>& b,
                            double alpha, double beta, Index k) {
  require_square(a, "w_max_k_law_suite");
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("w_max_k_law_suite: shapes disagree");
  const Index n = a.rows();
  if (k < 1 || k > n) throw std::invalid_argument("w_max_k_law_suite: k out of range");

  LawReport rep;
  const Interval wa = w_max_k(a, k);
  const Interval wb = w_max_k(b, k);

  {
    const Matrix scaled = max_add(alpha * a, beta * Matrix::Identity(n, n));
    const Interval lhs = w_max_k(scaled, k);
    const Interval rhs = interval_scale_shift(wa, alpha, beta);
    rep.add("(i) scale-shift", interval_eq(lhs, rhs),
            interval_eq(lhs, rhs) ? "" : show(lhs) + " vs " + show(rhs));
  }
  {
    const Interval lhs = w_max_k(max_add(a, b), k);
    const Interval rhs = interval_oplus(wa, wb);
    bool ok = rhs.contains(lhs);
    if (k == n) ok = ok && interval_eq(lhs, rhs);
    rep.add(k == n ? "(i) oplus-sum equality at k=n" : "(i) oplus-sum inclusion", ok,
            ok ? "" : show(lhs) + " vs " + show(rhs));
  }
  {
    bool ok = true;
    std::string detail;
    for (const Permutation& sigma : probe_permutations(a)) {
      const Interval conj = w_max_k(conjugate_by_permutation(a, sigma), k);
      if (!interval_eq(conj, wa)) {
        ok = false;
        detail = show(conj) + " vs " + show(wa);
        break;
      }
    }
    rep.add("(ii) conjugation invariance", ok, detail);
  }
  {
    bool ok = true;
    std::string detail;
    for (Index m = k; m < n && ok; ++m) {
      const Interval sub = w_max_k(a.topLeftCorner(m, m), k);
      if (!wa.contains(sub)) {
        ok = false;
        detail = "leading " + std::to_string(m) + "x" + std::to_string(m) + ": " + show(sub) +
                 " not in " + show(wa);
      }
    }
    // also drop each single index when the remaining block is large enough
    for (Index drop = 0; drop < n && ok && n - 1 >= k; ++drop) {
      Matrix sub(n - 1, n - 1);
      Index ii = 0;
      for (Index i = 0; i < n; ++i) {
        if (i == drop) continue;
        Index jj = 0;
        for (Index j = 0; j < n; ++j) {
          if (j == drop) continue;
          sub(ii, jj++) = a(i, j);
        }
        ++ii;
      }
      const Interval w = w_max_k(sub, k);
      if (!wa.contains(w)) {
        ok = false;
        detail = "drop " + std::to_string(drop + 1) + ": " + show(w) + " not in " + show(wa);
      }
    }
    rep.add("(iii) principal submatrix inclusion", ok, detail);
  }
  {
    const Interval wt = w_max_k(a.transpose(), k);
    rep.add("(iv) transpose invariance", interval_eq(wt, wa),
            interval_eq(wt, wa) ? "" : show(wt) + " vs " + show(wa));
  }
  {
    bool ok = true;
    std::string detail;
    Interval prev = w_max_k(a, 1);
    for (Index j = 2; j <= n; ++j) {
      const Interval cur = w_max_k(a, j);
      if (!prev.contains(cur)) {
        ok = false;
        detail = "k=" + std::to_string(j) + ": " + show(cur) + " not in " + show(prev);
        break;
      }
      prev = cur;
    }
    rep.add("(v) nesting chain", ok, detail);
  }
  return rep;
}

}  // namespace tropirange
