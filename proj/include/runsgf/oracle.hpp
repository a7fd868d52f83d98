#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "runsgf/pattern_spec.hpp"

namespace runsgf::oracle {

// Brute-force verification of pattern counts, with no generating functions.

inline constexpr std::uint64_t kDefaultBudget = 20'000'000;

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A maximal run: `length` copies of `symbol`.
struct RunBlock {
  unsigned symbol = 0;
  std::size_t length = 0;
  friend bool operator==(const RunBlock&, const RunBlock&) = default;
};

// Throws std::invalid_argument if a label is outside 1..ell.
std::vector<RunBlock> run_decomposition(const PatternSpec& spec, std::span<const unsigned> seq);

// Number of windows of ell consecutive maximal runs with symbols 1, 2, ..., ell
// and lengths >= k_1, ..., k_ell.
std::size_t count_in_sequence(const PatternSpec& spec, std::span<const unsigned> seq);

// Same count via std::regex matching of 1{k1,}2{k2,}...l{kl,} over the
// sequence written as text.
std::size_t count_in_sequence_regex(const PatternSpec& spec, std::span<const unsigned> seq);

// Parses "2231112333" style text (one digit per symbol; whitespace ignored).
std::vector<unsigned> parse_sequence(std::string_view text);

// Walks all ell^n sequences. With probabilities the table is in probability
// mode; without, it counts sequences. Throws BudgetExceeded when ell^n is
// above `budget`.
DistributionTable enumerate_distribution(const PatternSpec& spec, const std::optional<ProbModel>& probs,
                                         std::size_t n, std::uint64_t budget = kDefaultBudget);

// Scanner state for the dynamic program.
//   last_symbol: symbol of the current run, 0 before the first symbol;
//   run_length:  length of the current run, capped at that symbol's threshold;
//   stage:       how many completed maximal runs just before the current one
//                form the pattern prefix 1..stage.
struct OracleState {
  unsigned last_symbol = 0;
  unsigned run_length = 0;
  unsigned stage = 0;
  friend auto operator<=>(const OracleState&, const OracleState&) = default;
};

// Exact distribution via a dynamic program over (OracleState, count). An
// occurrence is credited when the run of ell's reaches k_ell while the
// preceding runs already form the prefix 1..ell-1.
DistributionTable dp_distribution(const PatternSpec& spec, const std::optional<ProbModel>& probs, std::size_t n);

}  // namespace runsgf::oracle
