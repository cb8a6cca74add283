#pragma once

#include <string>
#include <vector>

namespace tropirange {

struct LawResult {
  std::string law;
  bool pass = false;
  std::string detail;  // counterexample data on failure, empty otherwise
};

struct LawReport {
  std::vector<LawResult> results;

  bool all_pass() const {
    for (const auto& r : results)
      if (!r.pass) return false;
    return true;
  }

  void add(std::string law, bool pass, std::string detail = "") {
    results.push_back({std::move(law), pass, std::move(detail)});
  }

  void merge(const LawReport& other) {
    results.insert(results.end(), other.results.begin(), other.results.end());
  }
};

}  // namespace tropirange
