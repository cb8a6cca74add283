#include "tropirange/cli.hpp"

#include "tropirange/charpoly.hpp"
#include "tropirange/cnumrange.hpp"
#include "tropirange/inclusions.hpp"
#include "tropirange/isometry.hpp"
#include "tropirange/numrange.hpp"
#include "tropirange/oracles.hpp"
#include "tropirange/spectra.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <ostream>
#include <random>

namespace tropirange::cli {

namespace {

using json = nlohmann::ordered_json;

// Floats carry 12 significant digits in all JSON output; the field values are
// re-parsed after formatting so dumps stay byte-identical across runs.
json jnum(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return json(std::strtod(buf, nullptr));
}

json jnums(const std::vector<double>& vs) {
  json arr = json::array();
  for (double v : vs) arr.push_back(jnum(v));
  return arr;
}

json jmatrix(const Eigen::Ref<const Matrix>& a) {
  json rows = json::array();
  for (Index i = 0; i < a.rows(); ++i) {
    json row = json::array();
    for (Index j = 0; j < a.cols(); ++j) row.push_back(jnum(a(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json jspectrum(const Spectrum& s) {
  json arr = json::array();
  for (const auto& [value, mult] : s.values)
    arr.push_back(json{{"value", jnum(value)}, {"multiplicity", mult}});
  return arr;
}

json jlaws(const LawReport& rep) {
  int failed = 0;
  json failures = json::array();
  for (const auto& r : rep.results)
    if (!r.pass) {
      ++failed;
      if (failures.size() < 20)
        failures.push_back(json{{"law", r.law}, {"detail", r.detail}});
    }
  return json{{"checks", rep.results.size()},
              {"failed", failed},
              {"ok", rep.all_pass()},
              {"failures", std::move(failures)}};
}

Index env_cap(Index fallback) {
  if (const char* env = std::getenv("TROPIRANGE_CAP")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v >= 1) return static_cast<Index>(v);
  }
  return fallback;
}

void emit(std::ostream& out, const json& j) { out << j.dump() << "\n"; }

}  // namespace

ProbeReport probe_connect(Index n, Index k, int grid_m, int step) {
  if (n < 1 || n > 4)
    throw std::invalid_argument("probe_connect: n must lie in 1..4 (state-space guard)");
  if (k < 1 || k > n) throw std::invalid_argument("probe_connect: k must lie in 1..n");
  if (grid_m < 1 || grid_m > 6)
    throw std::invalid_argument("probe_connect: grid_m must lie in 1..6 (state-space guard)");
  if (step < 1 || step > grid_m)
    throw std::invalid_argument("probe_connect: step must lie in 1..grid_m");

  // Valid grid matrices have at most one nonzero per row (disjoint column
  // supports), so a state is one code per row: 0 = zero row, else a
  // (column, units) pair. Validity additionally needs an exact 1 per column.
  const long q = 1 + static_cast<long>(k) * grid_m;
  long total = 1;
  for (Index i = 0; i < n; ++i) total *= q;

  auto row_entry = [&](long code) -> std::pair<Index, int> {  // (column, units)
    if (code == 0) return {-1, 0};
    return {static_cast<Index>((code - 1) / grid_m), static_cast<int>((code - 1) % grid_m) + 1};
  };

  std::vector<long> codes(static_cast<std::size_t>(n));
  std::vector<std::int32_t> id_of(static_cast<std::size_t>(total), -1);
  std::vector<long> states;

  for (long key = 0; key < total; ++key) {
    long rest = key;
    for (Index r = 0; r < n; ++r) {
      codes[static_cast<std::size_t>(r)] = rest % q;
      rest /= q;
    }
    std::vector<bool> anchored(static_cast<std::size_t>(k), false);
    for (Index r = 0; r < n; ++r) {
      const auto [col, units] = row_entry(codes[static_cast<std::size_t>(r)]);
      if (col >= 0 && units == grid_m) anchored[static_cast<std::size_t>(col)] = true;
    }
    if (std::find(anchored.begin(), anchored.end(), false) != anchored.end()) continue;

    Matrix m = Matrix::Zero(n, k);
    for (Index r = 0; r < n; ++r) {
      const auto [col, units] = row_entry(codes[static_cast<std::size_t>(r)]);
      if (col >= 0) m(r, col) = static_cast<double>(units) / static_cast<double>(grid_m);
    }
    validate_isometry(m);  // structural filter and the module agree by construction
    id_of[static_cast<std::size_t>(key)] = static_cast<std::int32_t>(states.size());
    states.push_back(key);
  }

  // union-find over single-entry moves of `step` grid units
  std::vector<std::int32_t> parent(states.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::int32_t(std::int32_t)> find = [&](std::int32_t v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      parent[static_cast<std::size_t>(v)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
      v = parent[static_cast<std::size_t>(v)];
    }
    return v;
  };

  std::vector<long> pow_q(static_cast<std::size_t>(n), 1);
  for (Index r = 1; r < n; ++r) pow_q[static_cast<std::size_t>(r)] = pow_q[static_cast<std::size_t>(r - 1)] * q;

  for (std::size_t v = 0; v < states.size(); ++v) {
    long rest = states[v];
    for (Index r = 0; r < n; ++r) {
      codes[static_cast<std::size_t>(r)] = rest % q;
      rest /= q;
    }
    for (Index r = 0; r < n; ++r) {
      const auto [col, units] = row_entry(codes[static_cast<std::size_t>(r)]);
      for (Index c = 0; c < k; ++c) {
        const int cur = (c == col) ? units : 0;
        if (cur == 0 && col >= 0 && c != col) continue;  // row already used by another column
        for (const int next : {cur - step, cur + step}) {
          if (next < 0 || next > grid_m || next == cur) continue;
          const long new_code = next == 0 ? 0 : 1 + static_cast<long>(c) * grid_m + (next - 1);
          const long new_key =
              states[v] + (new_code - codes[static_cast<std::size_t>(r)]) * pow_q[static_cast<std::size_t>(r)];
          const std::int32_t w = id_of[static_cast<std::size_t>(new_key)];
          if (w < 0) continue;
          const std::int32_t ra = find(static_cast<std::int32_t>(v)), rb = find(w);
          if (ra != rb) parent[static_cast<std::size_t>(ra)] = rb;
        }
      }
    }
  }

  std::vector<std::size_t> sizes;
  {
    std::vector<std::int32_t> roots;
    std::vector<std::size_t> count;
    for (std::size_t v = 0; v < states.size(); ++v) {
      const std::int32_t r = find(static_cast<std::int32_t>(v));
      auto it = std::find(roots.begin(), roots.end(), r);
      if (it == roots.end()) {
        roots.push_back(r);
        count.push_back(1);
      } else {
        ++count[static_cast<std::size_t>(it - roots.begin())];
      }
    }
    sizes = std::move(count);
    std::sort(sizes.begin(), sizes.end(), std::greater<>());
  }

  ProbeReport rep;
  rep.n = n;
  rep.k = k;
  rep.grid_m = grid_m;
  rep.step = step;
  rep.vertices = states.size();
  rep.component_sizes = std::move(sizes);
  return rep;
}

namespace {

Matrix load(const std::string& path) { return parse_matrix_file(path); }

int run_impl(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"tropirange: numerical ranges, spectra and characteristic "
               "maxpolynomials of nonnegative matrices in the max-times algebra"};
  app.require_subcommand(1);

  std::string input, cfile, output, kind = "geometric", oracle_name;
  Index k = 1;
  double z = 0.0, density = 1.0;
  std::uint64_t seed = 1;
  Index cap = 0;  // 0: module default (or TROPIRANGE_CAP)
  int trials = 0, n_opt = 5, grid_m = 2, step = 1;
  bool sorted_diag = false, as_json = false;

  auto add_common = [&](CLI::App* sub, bool needs_input) {
    if (needs_input) sub->add_option("--input", input, "matrix file")->required();
    sub->add_flag("--json", as_json, "force JSON output (default for most verbs)");
    sub->add_option("--cap", cap, "brute-force cap override")->check(CLI::PositiveNumber);
  };

  auto pick_cap = [&](Index fallback) { return cap > 0 ? cap : env_cap(fallback); };

  auto* v_range = app.add_subcommand("range", "max numerical range W_max(A)");
  add_common(v_range, true);
  v_range->callback([&] {
    const Interval w = w_max(load(input));
    emit(out, json{{"lo", jnum(w.lo)}, {"hi", jnum(w.hi)}});
  });

  auto* v_krange = app.add_subcommand("krange", "max k-numerical range W^k_max(A)");
  add_common(v_krange, true);
  v_krange->add_option("--k", k, "number of columns")->required()->check(CLI::PositiveNumber);
  v_krange->callback([&] {
    const Interval w = w_max_k(load(input), k);
    emit(out, json{{"k", k}, {"lo", jnum(w.lo)}, {"hi", jnum(w.hi)}});
  });

  auto* v_witness = app.add_subcommand("witness", "isometry realizing a value of W^k_max(A)");
  add_common(v_witness, true);
  v_witness->add_option("--k", k, "number of columns")->required()->check(CLI::PositiveNumber);
  v_witness->add_option("--z", z, "target value")->required()->check(CLI::NonNegativeNumber);
  v_witness->callback([&] {
    const Matrix a = load(input);
    const Isometry w = witness_for(a, k, z);
    emit(out, json{{"k", k},
                   {"z", jnum(z)},
                   {"f", jnum(f_A(a, w))},
                   {"witness", jmatrix(w.matrix())},
                   {"witness_text", format_matrix(w.matrix())}});
  });

  auto* v_spectrum = app.add_subcommand("spectrum", "geometric or tropical max spectrum");
  add_common(v_spectrum, true);
  v_spectrum->add_option("--kind", kind, "geometric|tropical")
      ->check(CLI::IsMember({"geometric", "tropical"}));
  auto* spec_k = v_spectrum->add_option("--k", k, "k-spectrum instead of the full spectrum")
                     ->check(CLI::PositiveNumber);
  v_spectrum->callback([&] {
    const Matrix a = load(input);
    const bool tropical = kind == "tropical";
    if (spec_k->count() > 0) {
      const std::vector<double> vals = tropical ? sigma_trop_k(a, k, pick_cap(kDefaultCharpolyCap))
                                                : sigma_max_k(a, k);
      emit(out, json{{"kind", kind}, {"k", k}, {"values", jnums(vals)}});
      return;
    }
    if (tropical) {
      const MaxPolynomial p = characteristic_maxpolynomial(a, pick_cap(kDefaultCharpolyCap));
      emit(out, jspectrum(p.roots));
    } else {
      emit(out, jspectrum(sigma_max(a)));
    }
  });

  auto* v_charpoly = app.add_subcommand("charpoly", "characteristic maxpolynomial of A");
  add_common(v_charpoly, true);
  v_charpoly->callback([&] {
    const MaxPolynomial p = characteristic_maxpolynomial(load(input), pick_cap(kDefaultCharpolyCap));
    json roots = json::array();
    for (const auto& [value, mult] : p.roots.values)
      if (value > 0.0) roots.push_back(json{{"value", jnum(value)}, {"multiplicity", mult}});
    json essential = json::array();
    for (bool e : p.essential) essential.push_back(e);
    emit(out, json{{"deltas", jnums(p.deltas)},
                   {"essential", std::move(essential)},
                   {"roots", std::move(roots)},
                   {"zero_mult", p.zero_mult}});
  });

  auto* v_crange = app.add_subcommand("crange", "max c- or C-numerical range of A");
  add_common(v_crange, true);
  v_crange->add_option("--c", cfile, "weight vector or matrix file")->required();
  v_crange->callback([&] {
    const Matrix a = load(input);
    const Matrix cm = load(cfile);
    std::vector<double> values;
    const Index cap_eff = pick_cap(kDefaultCRangeCap);
    if (cm.cols() == 1)
      values = w_max_c(a, cm.col(0), cap_eff);
    else if (cm.rows() == 1)
      values = w_max_c(a, cm.row(0).transpose(), cap_eff);
    else
      values = w_max_C(a, cm, cap_eff);
    const Interval hull = conv_max(values);
    emit(out, json{{"values", jnums(values)},
                   {"hull", json{{"lo", jnum(hull.lo)}, {"hi", jnum(hull.hi)}}}});
  });

  auto* v_laws = app.add_subcommand("laws", "seeded law-suite batch");
  add_common(v_laws, false);
  v_laws->add_option("--seed", seed, "rng seed");
  v_laws->add_option("--trials", trials, "batch size")->check(CLI::PositiveNumber);
  v_laws->add_option("--n", n_opt, "matrix size")->check(CLI::PositiveNumber);
  v_laws->callback([&] {
    BatchConfig cfg;
    cfg.seed = seed;
    cfg.trials = trials > 0 ? trials : 20;
    cfg.n = n_opt;
    json j = jlaws(run_law_batch(cfg));
    j.insert(j.begin(), {"n", cfg.n});
    j.insert(j.begin(), {"trials", cfg.trials});
    j.insert(j.begin(), {"seed", cfg.seed});
    emit(out, j);
  });

  auto* v_oracle = app.add_subcommand("oracle", "cross-check one production path");
  add_common(v_oracle, false);
  v_oracle->add_option("name", oracle_name, "permanent|cycles-mu|power-radius|range-sampler|slope-roots")
      ->required()
      ->check(CLI::IsMember({"permanent", "cycles-mu", "power-radius", "range-sampler", "slope-roots"}));
  v_oracle->add_option("--seed", seed, "rng seed");
  v_oracle->add_option("--trials", trials, "batch size")->check(CLI::PositiveNumber);
  v_oracle->add_option("--n", n_opt, "matrix size")->check(CLI::PositiveNumber);
  v_oracle->callback([&] {
    const int t_eff = trials > 0 ? trials : 50;
    const Index n = std::min<Index>(n_opt, 6);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dens(0.3, 1.0);
    int failures = 0;
    for (int t = 0; t < t_eff; ++t) {
      const Matrix a = gen_matrix(n, dens(rng), rng(), false);
      if (oracle_name == "permanent") {
        if (max_permanent(a) != oracles::oracle_permanent(a)) ++failures;
      } else if (oracle_name == "cycles-mu") {
        if (mu(a) != oracles::oracle_cycles_mu(a)) ++failures;
      } else if (oracle_name == "power-radius") {
        const FrobeniusForm f = frobenius_form(a);
        for (Index j = 0; j < n; ++j) {
          const double prod = local_radius_ej(f, j);
          const double ref = oracles::oracle_power_radius(a, j, 4 * n * n);
          if (std::abs(prod - ref) > 5e-2 * std::max({prod, ref, 1e-9})) ++failures;
        }
      } else if (oracle_name == "range-sampler") {
        for (Index kk = 1; kk <= n; ++kk) {
          const Interval w = w_max_k(a, kk);
          const auto [lo, hi] = oracles::oracle_range_sampler(a, kk, 50, rng());
          if (!w.contains(lo) || !w.contains(hi)) ++failures;
        }
      } else {  // slope-roots
        const MaxPolynomial p = characteristic_maxpolynomial(a);
        const auto breaks = oracles::oracle_slope_roots(p.deltas, 1000);
        for (const auto& rv : p.roots.values) {
          const double root = rv.first;
          if (root <= 0.0) continue;
          const bool matched =
              std::any_of(breaks.begin(), breaks.end(), [&](const std::pair<double, int>& b) {
                return std::abs(std::log(b.first) - std::log(root)) < 1e-1;
              });
          if (!matched) ++failures;
        }
      }
    }
    emit(out, json{{"oracle", oracle_name},
                   {"trials", t_eff},
                   {"n", n},
                   {"failures", failures},
                   {"pass", failures == 0}});
  });

  auto* v_probe = app.add_subcommand("probe-connect",
                                     "connectivity probe of the discretized isometry set");
  add_common(v_probe, false);
  v_probe->add_option("--n", n_opt, "rows (1..4)")->required()->check(CLI::Range(1, 4));
  Index probe_k = 1;
  v_probe->add_option("--k", probe_k, "columns (1..n)")->required()->check(CLI::PositiveNumber);
  v_probe->add_option("--grid-m", grid_m, "grid denominator (1..6)")->check(CLI::Range(1, 6));
  v_probe->add_option("--step", step, "grid units per move")->check(CLI::PositiveNumber);
  v_probe->callback([&] {
    const ProbeReport rep = probe_connect(n_opt, probe_k, grid_m, step);
    json sizes = json::array();
    for (std::size_t s : rep.component_sizes) sizes.push_back(s);
    emit(out, json{{"n", rep.n},
                   {"k", rep.k},
                   {"grid_m", rep.grid_m},
                   {"step", rep.step},
                   {"vertices", rep.vertices},
                   {"components", rep.component_sizes.size()},
                   {"component_sizes", std::move(sizes)},
                   {"disclaimer", "discretized evidence, not a proof"}});
  });

  auto* v_gen = app.add_subcommand("gen", "random nonnegative matrix file");
  add_common(v_gen, false);
  v_gen->add_option("--n", n_opt, "matrix size")->required()->check(CLI::PositiveNumber);
  v_gen->add_option("--density", density, "nonzero density")->check(CLI::Range(0.0, 1.0));
  v_gen->add_option("--seed", seed, "rng seed");
  v_gen->add_flag("--sorted-diag", sorted_diag, "conjugate so the diagonal ascends");
  v_gen->add_option("--output", output, "write to file instead of stdout");
  v_gen->callback([&] {
    const Matrix a = gen_matrix(n_opt, density, seed, sorted_diag);
    if (!output.empty()) {
      write_matrix_file(output, a);
      emit(out, json{{"written", output}, {"n", n_opt}, {"seed", seed}});
    } else if (as_json) {
      emit(out, json{{"matrix", jmatrix(a)}});
    } else {
      out << format_matrix(a);
    }
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    err << "verbs: range krange witness spectrum charpoly crange laws oracle probe-connect gen\n";
    return 2;
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return run_impl(args, out, err);
  } catch (const std::exception& e) {
    json j{{"error", json{{"type", "domain"}, {"message", e.what()}}}};
    out << j.dump() << "\n";
    return 1;
  }
}

}  // namespace tropirange::cli
