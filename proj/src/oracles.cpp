#include "tropirange/oracles.hpp"

#include "tropirange/isometry.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <vector>

namespace tropirange::oracles {

namespace {

// order-independent product: smallest factors first
double multiset_product(std::vector<double> factors) {
  std::sort(factors.begin(), factors.end());
  double prod = 1.0;
  for (double f : factors) prod *= f;
  return prod;
}

void best_product_from(const Eigen::Ref<const Matrix>& a, Index row, std::uint32_t used,
                       std::vector<double>& factors, double& best) {
  const Index n = a.rows();
  if (row == n) {
    best = std::max(best, multiset_product(factors));
    return;
  }
  for (Index col = 0; col < n; ++col) {
    if (used & (1u << col)) continue;
    factors.push_back(a(row, col));
    best_product_from(a, row + 1, used | (1u << col), factors, best);
    factors.pop_back();
  }
}

}  // namespace

double oracle_permanent(const Eigen::Ref<const Matrix>& a) {
  require_square(a, "oracle_permanent");
  if (a.rows() > 12)
    throw std::invalid_argument("oracle_permanent: refusing n > 12 (full n! enumeration)");
  double best = 0.0;
  std::vector<double> factors;
  best_product_from(a, 0, 0, factors, best);
  return best;
}

double oracle_cycles_mu(const Eigen::Ref<const Matrix>& a) {
  require_square(a, "oracle_cycles_mu");
  const Index n = a.rows();
  double best = 0.0;
  std::vector<Index> path;
  std::vector<bool> on_path(static_cast<std::size_t>(n), false);

  auto close_cycle = [&](Index last, Index start) {
    std::vector<double> factors;
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
      factors.push_back(a(path[i], path[i + 1]));
    factors.push_back(a(last, start));
    const Index len = static_cast<Index>(factors.size());
    best = std::max(best, kth_root(multiset_product(std::move(factors)), len));
  };

  std::function<void(Index, Index)> dfs = [&](Index u, Index start) {
    for (Index v = 0; v < n; ++v) {
      if (a(u, v) <= 0.0) continue;
      if (v == start) close_cycle(u, start);
      else if (v > start && !on_path[static_cast<std::size_t>(v)]) {
        path.push_back(v);
        on_path[static_cast<std::size_t>(v)] = true;
        dfs(v, start);
        on_path[static_cast<std::size_t>(v)] = false;
        path.pop_back();
      }
    }
  };

  for (Index s = 0; s < n; ++s) {
    path.assign(1, s);
    on_path[static_cast<std::size_t>(s)] = true;
    dfs(s, s);
    on_path[static_cast<std::size_t>(s)] = false;
  }
  return best;
}

double oracle_power_radius(const Eigen::Ref<const Matrix>& a, Index j, Index m) {
  require_square(a, "oracle_power_radius");
  const Index n = a.rows();
  if (j < 0 || j >= n) throw std::invalid_argument("oracle_power_radius: index out of range");
  if (m < 1) throw std::invalid_argument("oracle_power_radius: need at least one step");
  std::vector<double> x(static_cast<std::size_t>(n), 0.0), y(static_cast<std::size_t>(n));
  x[static_cast<std::size_t>(j)] = 1.0;
  double log_acc = 0.0;
  for (Index step = 0; step < m; ++step) {
    double peak = 0.0;
    for (Index i = 0; i < n; ++i) {
      double v = 0.0;
      for (Index k = 0; k < n; ++k) v = std::max(v, a(i, k) * x[static_cast<std::size_t>(k)]);
      y[static_cast<std::size_t>(i)] = v;
      peak = std::max(peak, v);
    }
    if (peak == 0.0) return 0.0;
    log_acc += std::log(peak);
    for (Index i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] = y[static_cast<std::size_t>(i)] / peak;
  }
  return std::exp(log_acc / static_cast<double>(m));
}

RangeSample oracle_range_sampler(const Eigen::Ref<const Matrix>& a, Index k, int trials,
                                 std::uint64_t seed) {
  require_square(a, "oracle_range_sampler");
  if (trials < 1) throw std::invalid_argument("oracle_range_sampler: need at least one trial");
  const Index n = a.rows();
  double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
  for (int t = 0; t < trials; ++t) {
    const Isometry x = sample_isometry(n, k, seed + static_cast<std::uint64_t>(t));
    // quadratic-form evaluation independent of f_A
    double f = 0.0;
    for (Index c = 0; c < k; ++c)
      for (Index p = 0; p < n; ++p) {
        if (x.matrix()(p, c) == 0.0) continue;
        for (Index q = 0; q < n; ++q)
          f = std::max(f, x.matrix()(p, c) * x.matrix()(q, c) * a(p, q));
      }
    lo = std::min(lo, f);
    hi = std::max(hi, f);
  }
  return {lo, hi};
}

std::vector<std::pair<double, int>> oracle_slope_roots(const std::vector<double>& deltas,
                                                       int grid_points) {
  if (deltas.empty() || deltas.front() != 1.0)
    throw std::invalid_argument("oracle_slope_roots: deltas must start with 1");
  if (grid_points < 16) throw std::invalid_argument("oracle_slope_roots: grid too coarse");
  const Index n = static_cast<Index>(deltas.size()) - 1;

  // bounds from pairwise coefficient ratios; no positive ratios, no breaks
  double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
  for (Index l = 0; l <= n; ++l) {
    if (deltas[static_cast<std::size_t>(l)] <= 0.0) continue;
    for (Index m = l + 1; m <= n; ++m) {
      if (deltas[static_cast<std::size_t>(m)] <= 0.0) continue;
      const double r =
          kth_root(deltas[static_cast<std::size_t>(m)] / deltas[static_cast<std::size_t>(l)], m - l);
      lo = std::min(lo, r);
      hi = std::max(hi, r);
    }
  }
  if (!(hi > 0.0)) return {};

  const double u_lo = std::log(lo / 4.0), u_hi = std::log(hi * 4.0);
  const double du = (u_hi - u_lo) / static_cast<double>(grid_points - 1);
  auto g = [&](double u) {
    double best = -std::numeric_limits<double>::infinity();
    for (Index i = 0; i <= n; ++i) {
      if (deltas[static_cast<std::size_t>(i)] <= 0.0) continue;
      best = std::max(best, std::log(deltas[static_cast<std::size_t>(i)]) +
                                static_cast<double>(n - i) * u);
    }
    return best;
  };

  std::vector<double> slope(static_cast<std::size_t>(grid_points - 1));
  double prev = g(u_lo);
  for (int t = 1; t < grid_points; ++t) {
    const double cur = g(u_lo + du * t);
    slope[static_cast<std::size_t>(t - 1)] = (cur - prev) / du;
    prev = cur;
  }

  // compress into integer plateaus; every plateau change is a detected break
  std::vector<std::pair<double, int>> out;
  long plateau = std::lround(slope.front());
  double pending_from = u_lo;
  bool in_transition = false;
  for (std::size_t t = 1; t < slope.size(); ++t) {
    const double s = slope[t];
    const bool clean = std::abs(s - std::lround(s)) <= 0.01;
    if (clean && std::lround(s) == plateau && !in_transition) continue;
    if (!clean || std::lround(s) != plateau) {
      if (!in_transition) {
        in_transition = true;
        pending_from = u_lo + du * static_cast<double>(t);
      }
      if (clean) {
        const long next = std::lround(s);
        const double at = 0.5 * (pending_from + (u_lo + du * static_cast<double>(t)));
        out.emplace_back(std::exp(at), static_cast<int>(next - plateau));
        plateau = next;
        in_transition = false;
      }
    }
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

double oracle_assignment_permanent(const Eigen::Ref<const Matrix>& a) {
  require_square(a, "oracle_assignment_permanent");
  const Index n = a.rows();
  constexpr double kForbidden = 1e15;

  // Jonker-Volgenant style min-cost assignment with potentials, 1-based
  // internal arrays; cost is the negated log weight.
  auto cost = [&](Index i, Index j) {
    const double v = a(i, j);
    return v > 0.0 ? -std::log(v) : kForbidden;
  };
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> u(static_cast<std::size_t>(n + 1), 0.0), v(static_cast<std::size_t>(n + 1), 0.0);
  std::vector<Index> match(static_cast<std::size_t>(n + 1), 0), way(static_cast<std::size_t>(n + 1), 0);
  for (Index i = 1; i <= n; ++i) {
    match[0] = i;
    Index j0 = 0;
    std::vector<double> minv(static_cast<std::size_t>(n + 1), inf);
    std::vector<bool> used(static_cast<std::size_t>(n + 1), false);
    do {
      used[static_cast<std::size_t>(j0)] = true;
      const Index i0 = match[static_cast<std::size_t>(j0)];
      double delta = inf;
      Index j1 = 0;
      for (Index j = 1; j <= n; ++j) {
        if (used[static_cast<std::size_t>(j)]) continue;
        const double cur = cost(i0 - 1, j - 1) - u[static_cast<std::size_t>(i0)] -
                           v[static_cast<std::size_t>(j)];
        if (cur < minv[static_cast<std::size_t>(j)]) {
          minv[static_cast<std::size_t>(j)] = cur;
          way[static_cast<std::size_t>(j)] = j0;
        }
        if (minv[static_cast<std::size_t>(j)] < delta) {
          delta = minv[static_cast<std::size_t>(j)];
          j1 = j;
        }
      }
      for (Index j = 0; j <= n; ++j) {
        if (used[static_cast<std::size_t>(j)]) {
          u[static_cast<std::size_t>(match[static_cast<std::size_t>(j)])] += delta;
          v[static_cast<std::size_t>(j)] -= delta;
        } else {
          minv[static_cast<std::size_t>(j)] -= delta;
        }
      }
      j0 = j1;
    } while (match[static_cast<std::size_t>(j0)] != 0);
    do {
      const Index j1 = way[static_cast<std::size_t>(j0)];
      match[static_cast<std::size_t>(j0)] = match[static_cast<std::size_t>(j1)];
      j0 = j1;
    } while (j0 != 0);
  }
  double total = 0.0;
  for (Index j = 1; j <= n; ++j) total += cost(match[static_cast<std::size_t>(j)] - 1, j - 1);
  if (total >= kForbidden / 2.0) return 0.0;  // a zero entry was forced
  return std::exp(-total);
}

}  // namespace tropirange::oracles
