#pragma once

#include "tropirange/maxcore.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace tropirange::cli {

/// Connectivity probe over the discretized isometry set: all n×k matrices
/// with entries on the grid {0, 1/m, ..., 1} that validate, with edges
/// between matrices differing in exactly one entry by `step` grid units.
/// Discretized evidence only; it says nothing about the continuum question.
struct ProbeReport {
  Index n = 0, k = 0;
  int grid_m = 0, step = 1;
  std::size_t vertices = 0;
  std::vector<std::size_t> component_sizes;  // descending
};

ProbeReport probe_connect(Index n, Index k, int grid_m, int step = 1);

/// Entry point behind the tropirange binary: parses argv (without the
/// program name), writes the verb's output to `out`, diagnostics to `err`.
/// Returns 0 on success, 1 on domain errors (with a machine-readable error
/// object on stdout), 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tropirange::cli
