#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "runsgf/pattern_spec.hpp"

namespace runsgf {

struct CheckResult {
  std::string name;
  bool pass = true;
  std::string detail;
};

struct VerifyOptions {
  std::vector<std::size_t> ells{2, 3};
  unsigned k_max = 3;
  std::size_t n_max = 12;
  // Negates the last recurrence coefficient so the recurrence route must fail.
  bool perturb = false;
  unsigned threads = 0;
  std::uint64_t budget = 20'000'000;
};

// Describes the first (n, m) where the tables differ, or nullopt if equal.
std::optional<std::string> first_difference(const std::vector<DistributionTable>& expected,
                                            const std::vector<DistributionTable>& actual);

// Uniform probabilities plus two fixed pseudo-random rational vectors.
std::vector<ProbModel> verification_probs(std::size_t ell);

// Every threshold vector in {1..k_max}^ell, in lexicographic order.
std::vector<std::vector<unsigned>> threshold_grid(std::size_t ell, unsigned k_max);

// Cross-checks oracle, recurrence, series and transfer-engine routes over the
// sweep, plus fixed reference tables. Results come back in a fixed order.
std::vector<CheckResult> run_verification(const VerifyOptions& options);

}  // namespace runsgf
