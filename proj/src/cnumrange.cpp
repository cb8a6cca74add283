#include "tropirange/cnumrange.hpp"

#include <algorithm>
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

std::vector<double> dedup_sorted(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  std::vector<double> out;
  for (double x : v)
    if (out.empty() || !approx_eq(out.back(), x)) out.push_back(x);
  return out;
}

template <typename PerSigma>
std::vector<double> enumerate_sigma(Index n, PerSigma&& value) {
  std::vector<Index> sigma(static_cast<std::size_t>(n));
  std::iota(sigma.begin(), sigma.end(), Index{0});
  std::vector<double> vals;
  do {
    vals.push_back(value(sigma));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return dedup_sorted(std::move(vals));
}

std::string show_set(const std::vector<double>& s) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? ", " : "") << s[i];
  os << "}";
  return os.str();
}

}  // namespace

Interval conv_max(const std::vector<double>& values) {
  if (values.empty()) throw std::invalid_argument("conv_max: empty set has no hull");
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  return {*lo, *hi};
}

std::vector<double> w_max_c(const Eigen::Ref<const Matrix>& a, const Vector& c, Index cap) {
  require_square(a, "w_max_c");
  require_max_matrix(a, "w_max_c");
  const Index n = a.rows();
  if (c.size() != n)
    throw std::invalid_argument("w_max_c: weight vector has length " + std::to_string(c.size()) +
                                ", expected " + std::to_string(n));
  require_max_matrix(c, "w_max_c weights");
  require_cap(n, cap, "w_max_c");
  return enumerate_sigma(n, [&](const std::vector<Index>& sigma) {
    double v = 0.0;
    for (Index i = 0; i < n; ++i) {
      const Index si = sigma[static_cast<std::size_t>(i)];
      v = std::max(v, c(i) * a(si, si));
    }
    return v;
  });
}

Interval w_max_c_hull(const Eigen::Ref<const Matrix>& a, const Vector& c, Index cap) {
  return conv_max(w_max_c(a, c, cap));
}

std::vector<double> w_max_C(const Eigen::Ref<const Matrix>& a,
                            const Eigen::Ref<const Matrix>& c_mat, Index cap) {
  require_square(a, "w_max_C");
  require_max_matrix(a, "w_max_C");
  require_square(c_mat, "w_max_C weights");
  require_max_matrix(c_mat, "w_max_C weights");
  const Index n = a.rows();
  if (c_mat.rows() != n)
    throw std::invalid_argument("w_max_C: C is " + std::to_string(c_mat.rows()) + "x" +
                                std::to_string(c_mat.cols()) + " but A is " + std::to_string(n) +
                                "x" + std::to_string(n));
  require_cap(n, cap, "w_max_C");
  // tr⊗(C ⊗ X^t ⊗ A ⊗ X) with X the matrix of sigma equals
  // max_{i,j} c_ij · a_{sigma(j), sigma(i)}.
  return enumerate_sigma(n, [&](const std::vector<Index>& sigma) {
    double v = 0.0;
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j)
        v = std::max(v, c_mat(i, j) * a(sigma[static_cast<std::size_t>(j)],
                                        sigma[static_cast<std::size_t>(i)]));
    return v;
  });
}

std::vector<double> set_oplus(const std::vector<double>& s, const std::vector<double>& t) {
  std::vector<double> out;
  out.reserve(s.size() * t.size());
  for (double u : s)
    for (double v : t) out.push_back(std::max(u, v));
  return dedup_sorted(std::move(out));
}

bool subset_tol(const std::vector<double>& s, const std::vector<double>& t) {
  for (double u : s) {
    bool found = false;
    for (double v : t)
      if (approx_eq(u, v)) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

bool set_eq_tol(const std::vector<double>& s, const std::vector<double>& t) {
  return subset_tol(s, t) && subset_tol(t, s);
}

LawReport c_range_law_suite(const Eigen::Ref<const Matrix>& a, const Eigen::Ref<const Matrix>& b,
                            const Eigen::Ref<const Matrix>& c_mat,
                            const Eigen::Ref<const Matrix>& d_mat, double alpha, double beta,
                            Index cap) {
  require_square(a, "c_range_law_suite");
  const Index n = a.rows();
  if (b.rows() != n || c_mat.rows() != n || d_mat.rows() != n || b.cols() != n ||
      c_mat.cols() != n || d_mat.cols() != n)
    throw std::invalid_argument("c_range_law_suite: all four matrices must be " +
                                std::to_string(n) + "x" + std::to_string(n));

  LawReport rep;
  const std::vector<double> wca = w_max_C(a, c_mat, cap);
  const std::vector<double> wcb = w_max_C(b, c_mat, cap);

  {
    const Matrix scaled = max_add(alpha * a, beta * Matrix::Identity(n, n));
    const std::vector<double> lhs = w_max_C(scaled, c_mat, cap);
    const double shift = beta * trace_max(c_mat);
    std::vector<double> rhs;
    for (double v : wca) rhs.push_back(std::max(alpha * v, shift));
    rhs = dedup_sorted(std::move(rhs));
    const bool ok = set_eq_tol(lhs, rhs);
    rep.add("(i) scale-shift", ok, ok ? "" : show_set(lhs) + " vs " + show_set(rhs));
  }
  {
    const std::vector<double> lhs = w_max_C(max_add(a, b), c_mat, cap);
    const bool ok = subset_tol(lhs, set_oplus(wca, wcb));
    rep.add("(ii) W^C(A⊕B) inclusion", ok, ok ? "" : show_set(lhs));
  }
  {
    const std::vector<double> lhs = w_max_C(a, max_add(c_mat, d_mat), cap);
    const std::vector<double> rhs = set_oplus(wca, w_max_C(a, d_mat, cap));
    const bool ok = subset_tol(lhs, rhs);
    rep.add("(ii) W^{C⊕D}(A) inclusion", ok, ok ? "" : show_set(lhs) + " vs " + show_set(rhs));
  }
  {
    bool ok = true;
    std::string detail;
    std::vector<Index> rev(static_cast<std::size_t>(n));
    for (Index i = 0; i < n; ++i) rev[static_cast<std::size_t>(i)] = n - 1 - i;
    for (const Permutation& sigma :
         {Permutation::identity(n), Permutation(rev), sort_diagonal_permutation(a)}) {
      const std::vector<double> conj = w_max_C(conjugate_by_permutation(a, sigma), c_mat, cap);
      if (!set_eq_tol(conj, wca)) {
        ok = false;
        detail = show_set(conj) + " vs " + show_set(wca);
        break;
      }
    }
    rep.add("(iii) conjugation invariance", ok, detail);
  }
  {
    // transpose law needs a symmetric weight; symmetrize the given C
    const Matrix sym = max_add(c_mat, c_mat.transpose());
    const std::vector<double> left = w_max_C(a.transpose(), sym, cap);
    const std::vector<double> right = w_max_C(a, sym, cap);
    const bool ok = set_eq_tol(left, right);
    rep.add("(iv) transpose law, symmetric C", ok,
            ok ? "" : show_set(left) + " vs " + show_set(right));
  }
  {
    const std::vector<double> lhs = w_max_C(a, alpha * Matrix::Identity(n, n), cap);
    const bool ok = lhs.size() == 1 && lhs.front() == alpha * trace_max(a);
    rep.add("(v) alpha*I gives {alpha*tr(A)}", ok, ok ? "" : show_set(lhs));
  }
  {
    const std::vector<double> rhs = w_max_C(c_mat, a, cap);
    const bool ok = set_eq_tol(wca, rhs);
    rep.add("(vi) W^C(A) = W^A(C)", ok, ok ? "" : show_set(wca) + " vs " + show_set(rhs));
  }
  return rep;
}

}  // namespace tropirange
