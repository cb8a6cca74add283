#pragma once

#include "tropirange/maxcore.hpp"

#include <utility>
#include <vector>

// Geometric max eigenvalues. Every local spectral radius r_x(A) is a maximum
// cycle geometric mean of some strongly connected class of the digraph
// {(i,j) : a_ij > 0}; the access relation between classes determines which
// class each standard basis vector sees.

namespace tropirange {

struct Spectrum {
  enum class Kind { geometric, tropical };
  Kind kind = Kind::geometric;
  // (eigenvalue, multiplicity), values strictly decreasing.
  std::vector<std::pair<double, int>> values;

  int total_multiplicity() const {
    int t = 0;
    for (const auto& [v, m] : values) t += m;
    return t;
  }
  double max_value() const { return values.empty() ? 0.0 : values.front().first; }

  /// The n values listed with multiplicity, ascending.
  std::vector<double> expanded_ascending() const;
};

/// The distinct k-subset maxima of a multiplicity-expanded eigenvalue list:
/// the n-k+1 largest listed values, deduplicated, descending.
std::vector<double> k_subset_max_values(const Spectrum& s, Index k);

struct FrobeniusForm {
  std::vector<int> class_of;               // node -> class index
  std::vector<std::vector<Index>> classes; // node sets N_1..N_l
  std::vector<double> class_radius;        // r⊗(B_mu) per class
  std::vector<std::vector<bool>> reach;    // reach[mu][nu]: mu accesses nu (reflexive, transitive)

  Index size() const { return static_cast<Index>(class_of.size()); }
};

/// Strongly connected components of {(i,j): a_ij > 0}, condensation
/// reachability and per-class cycle-mean radius. Classes come out in Tarjan
/// completion order (sinks of the condensation first); trivial 1x1 zero
/// classes get radius 0.
FrobeniusForm frobenius_form(const Eigen::Ref<const Matrix>& a);

/// Maximum cycle geometric mean over simple cycles; 0 when the digraph is
/// acyclic. Computed per class via a Karp-style dynamic program in log space
/// with explicit critical-cycle extraction.
double mu(const Eigen::Ref<const Matrix>& a);

/// r_{e_j}(A) = max{r⊗(B_mu) : mu accesses j}. j is 0-based.
double local_radius_ej(const FrobeniusForm& f, Index j);

/// r_x(A) = max of r_{e_i} over the support of x; x must be nonzero.
double local_radius_x(const FrobeniusForm& f, const Eigen::Ref<const Matrix>& x);

/// Distinct values of {r_{e_j}} with standard vector multiplicities; the
/// multiplicities sum to n and the top value is mu(A).
Spectrum sigma_max(const Eigen::Ref<const Matrix>& a);

/// Max k-geometric spectrum: distinct k-subset maxima of the eigenvalue list.
std::vector<double> sigma_max_k(const Eigen::Ref<const Matrix>& a, Index k);

}  // namespace tropirange
