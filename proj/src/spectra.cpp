#include "tropirange/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

namespace tropirange {

std::vector<double> Spectrum::expanded_ascending() const {
  std::vector<double> out;
  for (auto it = values.rbegin(); it != values.rend(); ++it)
    out.insert(out.end(), static_cast<std::size_t>(it->second), it->first);
  return out;
}

std::vector<double> k_subset_max_values(const Spectrum& s, Index k) {
  const std::vector<double> list = s.expanded_ascending();
  const Index n = static_cast<Index>(list.size());
  if (k < 1 || k > n)
    throw std::invalid_argument("k_subset_max_values: k = " + std::to_string(k) +
                                " out of range 1.." + std::to_string(n));
  // every k-subset max is one of the n-k+1 largest listed values, and each of
  // those is attained by the subset of the k-1 smallest plus itself
  std::vector<double> out(list.begin() + (k - 1), list.end());
  std::sort(out.begin(), out.end(), std::greater<>());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

struct Digraph {
  Index n = 0;
  std::vector<std::vector<Index>> out;  // positive-entry adjacency
};

Digraph positive_digraph(const Eigen::Ref<const Matrix>& a) {
  Digraph g;
  g.n = a.rows();
  g.out.resize(static_cast<std::size_t>(g.n));
  for (Index i = 0; i < g.n; ++i)
    for (Index j = 0; j < g.n; ++j)
      if (a(i, j) > 0.0) g.out[static_cast<std::size_t>(i)].push_back(j);
  return g;
}

// Tarjan; components emitted in completion order (condensation sinks first).
struct Tarjan {
  const Digraph& g;
  std::vector<int> index, low, comp;
  std::vector<bool> on_stack;
  std::vector<Index> stack;
  int counter = 0;
  int ncomp = 0;

  explicit Tarjan(const Digraph& g_)
      : g(g_),
        index(static_cast<std::size_t>(g_.n), -1),
        low(static_cast<std::size_t>(g_.n), 0),
        comp(static_cast<std::size_t>(g_.n), -1),
        on_stack(static_cast<std::size_t>(g_.n), false) {
    for (Index v = 0; v < g.n; ++v)
      if (index[static_cast<std::size_t>(v)] < 0) dfs(v);
  }

  void dfs(Index v) {
    index[static_cast<std::size_t>(v)] = low[static_cast<std::size_t>(v)] = counter++;
    stack.push_back(v);
    on_stack[static_cast<std::size_t>(v)] = true;
    for (Index w : g.out[static_cast<std::size_t>(v)]) {
      if (index[static_cast<std::size_t>(w)] < 0) {
        dfs(w);
        low[static_cast<std::size_t>(v)] =
            std::min(low[static_cast<std::size_t>(v)], low[static_cast<std::size_t>(w)]);
      } else if (on_stack[static_cast<std::size_t>(w)]) {
        low[static_cast<std::size_t>(v)] =
            std::min(low[static_cast<std::size_t>(v)], index[static_cast<std::size_t>(w)]);
      }
    }
    if (low[static_cast<std::size_t>(v)] == index[static_cast<std::size_t>(v)]) {
      while (true) {
        const Index w = stack.back();
        stack.pop_back();
        on_stack[static_cast<std::size_t>(w)] = false;
        comp[static_cast<std::size_t>(w)] = ncomp;
        if (w == v) break;
      }
      ++ncomp;
    }
  }
};

/// Geometric mean of one cycle: sorted_product of the traversed entries,
/// then a single k-th root.
double cycle_mean(const Eigen::Ref<const Matrix>& a, const std::vector<Index>& cycle) {
  const Index len = static_cast<Index>(cycle.size());
  std::vector<double> factors;
  factors.reserve(static_cast<std::size_t>(len));
  for (Index i = 0; i < len; ++i)
    factors.push_back(a(cycle[static_cast<std::size_t>(i)],
                        cycle[static_cast<std::size_t>((i + 1) % len)]));
  return kth_root(sorted_product(std::move(factors)), len);
}

// Maximum cycle geometric mean within one strongly connected class.
// Karp's recurrence in log space locates an optimal closed walk; the walk is
// decomposed into simple cycles and each candidate is re-evaluated with
// cycle_mean so the reported value is independent of the DP's path sums.
double class_cycle_radius(const Eigen::Ref<const Matrix>& a, const std::vector<Index>& nodes) {
  const Index m = static_cast<Index>(nodes.size());
  if (m == 1) {
    const Index v = nodes.front();
    return a(v, v) > 0.0 ? a(v, v) : 0.0;
  }
  // edges inside the class, in log space
  std::vector<std::vector<std::pair<Index, double>>> in_edges(static_cast<std::size_t>(m));
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < m; ++j) {
      const double w = a(nodes[static_cast<std::size_t>(i)], nodes[static_cast<std::size_t>(j)]);
      if (w > 0.0) in_edges[static_cast<std::size_t>(j)].emplace_back(i, std::log(w));
    }

  std::vector<std::vector<double>> dist(static_cast<std::size_t>(m + 1),
                                        std::vector<double>(static_cast<std::size_t>(m), kNegInf));
  std::vector<std::vector<Index>> parent(
      static_cast<std::size_t>(m + 1), std::vector<Index>(static_cast<std::size_t>(m), -1));
  dist[0][0] = 0.0;  // source: first node of the class
  for (Index t = 1; t <= m; ++t)
    for (Index v = 0; v < m; ++v)
      for (const auto& [u, w] : in_edges[static_cast<std::size_t>(v)]) {
        const double cand = dist[static_cast<std::size_t>(t - 1)][static_cast<std::size_t>(u)] + w;
        if (cand > dist[static_cast<std::size_t>(t)][static_cast<std::size_t>(v)]) {
          dist[static_cast<std::size_t>(t)][static_cast<std::size_t>(v)] = cand;
          parent[static_cast<std::size_t>(t)][static_cast<std::size_t>(v)] = u;
        }
      }

  double best = kNegInf;
  Index best_v = -1;
  for (Index v = 0; v < m; ++v) {
    if (dist[static_cast<std::size_t>(m)][static_cast<std::size_t>(v)] == kNegInf) continue;
    double val = std::numeric_limits<double>::infinity();
    for (Index t = 0; t < m; ++t) {
      if (dist[static_cast<std::size_t>(t)][static_cast<std::size_t>(v)] == kNegInf) continue;
      val = std::min(val, (dist[static_cast<std::size_t>(m)][static_cast<std::size_t>(v)] -
                           dist[static_cast<std::size_t>(t)][static_cast<std::size_t>(v)]) /
                              static_cast<double>(m - t));
    }
    if (val > best) {
      best = val;
      best_v = v;
    }
  }
  if (best_v < 0) throw std::logic_error("class_cycle_radius: no closed walk in a class");

  // walk of length m ending at best_v
  std::vector<Index> walk(static_cast<std::size_t>(m + 1));
  walk[static_cast<std::size_t>(m)] = best_v;
  for (Index t = m; t > 0; --t)
    walk[static_cast<std::size_t>(t - 1)] =
        parent[static_cast<std::size_t>(t)][static_cast<std::size_t>(walk[static_cast<std::size_t>(t)])];

  // splice out every simple cycle on the walk and take the best canonical mean
  double radius = 0.0;
  std::vector<Index> chain;
  std::vector<Index> pos(static_cast<std::size_t>(m), -1);
  for (Index step = 0; step <= m; ++step) {
    const Index v = walk[static_cast<std::size_t>(step)];
    if (pos[static_cast<std::size_t>(v)] >= 0) {
      const Index at = pos[static_cast<std::size_t>(v)];
      std::vector<Index> cyc;
      for (std::size_t q = static_cast<std::size_t>(at); q < chain.size(); ++q) {
        cyc.push_back(nodes[static_cast<std::size_t>(chain[q])]);
        pos[static_cast<std::size_t>(chain[q])] = -1;
      }
      radius = std::max(radius, cycle_mean(a, cyc));
      chain.resize(static_cast<std::size_t>(at));
    }
    pos[static_cast<std::size_t>(v)] = static_cast<Index>(chain.size());
    chain.push_back(v);
  }
  return radius;
}

}  // namespace

FrobeniusForm frobenius_form(const Eigen::Ref<const Matrix>& a) {
  require_square(a, "frobenius_form");
  require_max_matrix(a, "frobenius_form");
  const Digraph g = positive_digraph(a);
  const Tarjan t(g);

  FrobeniusForm f;
  f.class_of.assign(t.comp.begin(), t.comp.end());
  f.classes.resize(static_cast<std::size_t>(t.ncomp));
  for (Index v = 0; v < g.n; ++v)
    f.classes[static_cast<std::size_t>(t.comp[static_cast<std::size_t>(v)])].push_back(v);

  f.class_radius.resize(static_cast<std::size_t>(t.ncomp));
  for (int c = 0; c < t.ncomp; ++c)
    f.class_radius[static_cast<std::size_t>(c)] =
        class_cycle_radius(a, f.classes[static_cast<std::size_t>(c)]);

  // condensation edges, then reflexive-transitive closure by DFS
  std::vector<std::vector<int>> cout(static_cast<std::size_t>(t.ncomp));
  for (Index u = 0; u < g.n; ++u)
    for (Index v : g.out[static_cast<std::size_t>(u)]) {
      const int cu = t.comp[static_cast<std::size_t>(u)], cv = t.comp[static_cast<std::size_t>(v)];
      if (cu != cv) cout[static_cast<std::size_t>(cu)].push_back(cv);
    }
  f.reach.assign(static_cast<std::size_t>(t.ncomp),
                 std::vector<bool>(static_cast<std::size_t>(t.ncomp), false));
  for (int c = 0; c < t.ncomp; ++c) {
    std::vector<int> todo{c};
    while (!todo.empty()) {
      const int x = todo.back();
      todo.pop_back();
      if (f.reach[static_cast<std::size_t>(c)][static_cast<std::size_t>(x)]) continue;
      f.reach[static_cast<std::size_t>(c)][static_cast<std::size_t>(x)] = true;
      for (int y : cout[static_cast<std::size_t>(x)]) todo.push_back(y);
    }
  }
  return f;
}

double mu(const Eigen::Ref<const Matrix>& a) {
  const FrobeniusForm f = frobenius_form(a);
  double best = 0.0;
  for (double r : f.class_radius) best = std::max(best, r);
  return best;
}

double local_radius_ej(const FrobeniusForm& f, Index j) {
  if (j < 0 || j >= f.size())
    throw std::invalid_argument("local_radius_ej: index " + std::to_string(j) +
                                " out of range 0.." + std::to_string(f.size() - 1));
  const int target = f.class_of[static_cast<std::size_t>(j)];
  double best = 0.0;
  for (std::size_t mu_c = 0; mu_c < f.classes.size(); ++mu_c)
    if (f.reach[mu_c][static_cast<std::size_t>(target)])
      best = std::max(best, f.class_radius[mu_c]);
  return best;
}

double local_radius_x(const FrobeniusForm& f, const Eigen::Ref<const Matrix>& x) {
  if (x.cols() != 1 || x.rows() != f.size())
    throw std::invalid_argument("local_radius_x: expected a " + std::to_string(f.size()) +
                                "-vector");
  bool any = false;
  double best = 0.0;
  for (Index i = 0; i < x.rows(); ++i) {
    if (x(i, 0) < 0.0) throw std::invalid_argument("local_radius_x: vector must be nonnegative");
    if (x(i, 0) > 0.0) {
      any = true;
      best = std::max(best, local_radius_ej(f, i));
    }
  }
  if (!any) throw std::invalid_argument("local_radius_x: zero vector has no local radius");
  return best;
}

Spectrum sigma_max(const Eigen::Ref<const Matrix>& a) {
  const FrobeniusForm f = frobenius_form(a);
  std::map<double, int, std::greater<>> counts;
  for (Index j = 0; j < f.size(); ++j) ++counts[local_radius_ej(f, j)];
  Spectrum s;
  s.kind = Spectrum::Kind::geometric;
  s.values.assign(counts.begin(), counts.end());
  return s;
}

std::vector<double> sigma_max_k(const Eigen::Ref<const Matrix>& a, Index k) {
  return k_subset_max_values(sigma_max(a), k);
}

}  // namespace tropirange
