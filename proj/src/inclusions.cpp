#include "tropirange/inclusions.hpp"

#include "tropirange/charpoly.hpp"
#include "tropirange/cnumrange.hpp"
#include "tropirange/numrange.hpp"
#include "tropirange/spectra.hpp"

#include <random>
#include <sstream>

namespace tropirange {

namespace {

std::string show(const Interval& x) {
  std::ostringstream os;
  os << "[" << x.lo << ", " << x.hi << "]";
  return os.str();
}

}  // namespace

LawReport spectral_inclusion_report(const Eigen::Ref<const Matrix>& a, Index k, Index cap) {
  LawReport rep;
  const Interval w = w_max_k(a, k);
  {
    const Interval hull = conv_max(sigma_max_k(a, k));
    const bool ok = w.contains(hull);
    rep.add("conv(sigma_max^" + std::to_string(k) + ") in W^" + std::to_string(k), ok,
            ok ? "" : show(hull) + " not in " + show(w));
  }
  {
    const Interval hull = conv_max(sigma_trop_k(a, k, cap));
    const bool ok = w.contains(hull);
    rep.add("conv(sigma_trop^" + std::to_string(k) + ") in W^" + std::to_string(k), ok,
            ok ? "" : show(hull) + " not in " + show(w));
  }
  return rep;
}

LawReport charpoly_spectra_invariants(const Eigen::Ref<const Matrix>& a, Index cap) {
  LawReport rep;
  const Index n = a.rows();
  const MaxPolynomial p = characteristic_maxpolynomial(a, cap);
  const Spectrum sm = sigma_max(a);
  const double mu_a = mu(a);

  rep.add("root multiplicities sum to n",
          p.roots.total_multiplicity() == static_cast<int>(n),
          "");
  rep.add("sigma_max multiplicities sum to n", sm.total_multiplicity() == static_cast<int>(n), "");
  rep.add("max tropical root equals mu", p.roots.max_value() == mu_a,
          p.roots.max_value() == mu_a
              ? ""
              : std::to_string(p.roots.max_value()) + " vs " + std::to_string(mu_a));
  rep.add("max geometric value equals mu", sm.max_value() == mu_a, "");

  {
    // sigma_max(A) ⊆ sigma_trop(A) as value sets
    bool ok = true;
    for (const auto& [v, m] : sm.values) {
      bool found = false;
      for (const auto& [r, rm] : p.roots.values)
        if (approx_eq(v, r)) {
          found = true;
          break;
        }
      if (!found) {
        ok = false;
        break;
      }
    }
    rep.add("sigma_max within sigma_trop", ok, "");
  }
  {
    // conjugation invariance of deltas, flags, roots and sigma_max
    std::vector<Index> rot(static_cast<std::size_t>(n));
    for (Index i = 0; i < n; ++i) rot[static_cast<std::size_t>(i)] = (i + 1) % n;
    const Matrix conj = conjugate_by_permutation(a, Permutation(rot));
    const MaxPolynomial q = characteristic_maxpolynomial(conj, cap);
    bool ok = q.deltas == p.deltas && q.essential == p.essential;
    const Spectrum sc = sigma_max(conj);
    ok = ok && sc.values == sm.values && q.roots.values == p.roots.values;
    rep.add("conjugation invariance of charpoly and spectra", ok, "");
  }
  {
    // extremal ratio identities around each essential index
    std::vector<Index> ess;
    for (Index i = 0; i <= n; ++i)
      if (p.essential[static_cast<std::size_t>(i)]) ess.push_back(i);
    bool ok = true;
    for (std::size_t m = 1; m < ess.size() && ok; ++m) {
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t l = 0; l < m; ++l)
        best = std::min(best, kth_root(p.deltas[static_cast<std::size_t>(ess[m])] /
                                           p.deltas[static_cast<std::size_t>(ess[l])],
                                       ess[m] - ess[l]));
      ok = best == kth_root(p.deltas[static_cast<std::size_t>(ess[m])] /
                                p.deltas[static_cast<std::size_t>(ess[m - 1])],
                            ess[m] - ess[m - 1]);
    }
    for (std::size_t m = 0; m + 1 < ess.size() && ok; ++m) {
      double best = 0.0;
      for (std::size_t l = m + 1; l < ess.size(); ++l)
        best = std::max(best, kth_root(p.deltas[static_cast<std::size_t>(ess[l])] /
                                           p.deltas[static_cast<std::size_t>(ess[m])],
                                       ess[l] - ess[m]));
      ok = best == kth_root(p.deltas[static_cast<std::size_t>(ess[m + 1])] /
                                p.deltas[static_cast<std::size_t>(ess[m])],
                            ess[m + 1] - ess[m]);
    }
    rep.add("extremal ratio identities", ok, "");
  }
  {
    // between consecutive roots the dominating essential term carries the
    // whole polynomial
    std::vector<Index> ess;
    for (Index i = 0; i <= n; ++i)
      if (p.essential[static_cast<std::size_t>(i)]) ess.push_back(i);
    bool ok = true;
    std::vector<double> breaks;  // descending root values between essential terms
    for (std::size_t m = 1; m < ess.size(); ++m)
      breaks.push_back(kth_root(p.deltas[static_cast<std::size_t>(ess[m])] /
                                    p.deltas[static_cast<std::size_t>(ess[m - 1])],
                                ess[m] - ess[m - 1]));
    for (std::size_t seg = 0; seg < ess.size() && ok; ++seg) {
      const double upper = seg == 0 ? (breaks.empty() ? 1.0 : breaks.front() * 4.0)
                                    : breaks[seg - 1];
      const double lower = seg < breaks.size() ? breaks[seg] : upper / 4.0;
      if (!(lower < upper)) continue;
      const double x = std::sqrt(lower * upper);  // interior point of the segment
      if (x <= 0.0) continue;
      const double full = charpoly_eval(p.deltas, x);
      const double term = p.deltas[static_cast<std::size_t>(ess[seg])] *
                          std::pow(x, static_cast<double>(n - ess[seg]));
      ok = full == term;
    }
    rep.add("piecewise evaluation identity", ok, "");
  }
  {
    // diagonal bounds on the diagonally sorted conjugate
    const Matrix sorted = conjugate_by_permutation(a, sort_diagonal_permutation(a));
    LawReport bounds = diagonal_bound_check(sorted, cap);
    rep.add("diagonal bound chain", bounds.all_pass(), "");
    bool l1 = true;
    const std::vector<double> deltas = delta_coefficients(sorted, cap);
    for (Index i = 0; i + 1 <= n && l1; ++i)
      l1 = leq_tol(deltas[static_cast<std::size_t>(i)] * sorted(n - i - 1, n - i - 1),
                   deltas[static_cast<std::size_t>(i + 1)]);
    rep.add("delta growth vs diagonal", l1, "");
  }
  return rep;
}

Matrix gen_matrix(Index n, double density, std::uint64_t seed, bool sorted_diag) {
  if (n < 1) throw std::invalid_argument("gen_matrix: n must be at least 1");
  if (!(density >= 0.0 && density <= 1.0))
    throw std::invalid_argument("gen_matrix: density must lie in [0,1]");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_real_distribution<double> mag(0.0, 10.0);
  Matrix a = Matrix::Zero(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      if (coin(rng) < density) a(i, j) = mag(rng);
  if (sorted_diag) a = conjugate_by_permutation(a, sort_diagonal_permutation(a));
  return a;
}

LawReport run_law_batch(const BatchConfig& cfg) {
  LawReport rep;
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> scalars(0.0, 5.0);
  std::uniform_real_distribution<double> densities(0.3, 1.0);
  for (int t = 0; t < cfg.trials; ++t) {
    const std::uint64_t s = rng();
    const Matrix a = gen_matrix(cfg.n, densities(rng), s, false);
    const Matrix b = gen_matrix(cfg.n, densities(rng), s + 1, false);
    const double alpha = scalars(rng), beta = scalars(rng);

    LawReport trial;
    for (Index k = 1; k <= cfg.n; ++k) trial.merge(w_max_k_law_suite(a, b, alpha, beta, k));
    if (cfg.n <= kDefaultCRangeCap) {
      const Matrix c = gen_matrix(cfg.n, densities(rng), s + 2, false);
      const Matrix d = gen_matrix(cfg.n, densities(rng), s + 3, false);
      trial.merge(c_range_law_suite(a, b, c, d, alpha, beta));
    }
    trial.merge(charpoly_spectra_invariants(a));
    for (Index k = 1; k < cfg.n; ++k) trial.merge(spectral_inclusion_report(a, k));

    for (auto& r : trial.results) r.law = "trial " + std::to_string(t) + ": " + r.law;
    rep.merge(trial);
  }
  return rep;
}

}  // namespace tropirange
