#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "runsgf/pattern_spec.hpp"
#include "runsgf/rational_gf.hpp"

namespace runsgf {

// Generating functions of a single run of one state: runs shorter than the
// state's threshold, and runs at least that long.
struct BlockGFs {
  RationalGF short_runs;
  RationalGF long_runs;
};

// Sequences over states 1..j whose last maximal runs complete the prefix
// pattern (k_1..k_j) at the right end, and all other nonempty sequences over
// the same states. Neither includes the empty sequence.
struct RightEndGFs {
  RationalGF at_end;
  RationalGF complement;
};

BlockGFs block_gfs(const PatternSpec& spec, const ProbModel& probs, std::size_t state);

// Closed form for the prefix of states 1..prefix (defaults to all states).
// Over a strict prefix the probabilities sum to less than one.
RightEndGFs right_end_gf(const PatternSpec& spec, const ProbModel& probs, std::size_t prefix = 0);

// Counting version (every state weighted 1): z^k / ((1-z)^(l-1) (1 - l z)).
RightEndGFs right_end_gf_iid(const PatternSpec& spec, std::size_t prefix = 0);

// Double generating function sum_n sum_m P_n(m) w^m z^n, empty sequence included.
RationalGF pattern_gf(const PatternSpec& spec, const ProbModel& probs);

// Double generating function sum_n sum_m A_n(m) w^m z^n of sequence counts.
RationalGF pattern_gf_iid(const PatternSpec& spec);

// Coefficients of the linear recurrence for F_n(w) read off the expansion
// (1-z)·prod_{i=2}^{l-1}(1 - p_i z) = 1 - a_1 z - ... - a_{l-1} z^{l-1}.
RecurrenceSpec recurrence_spec(const PatternSpec& spec, const ProbModel& probs);

// Symbolic forms of the expansion and recurrence for a given number of states,
// e.g. for l = 3:
//   U_3(z) = (1-z)(1-p_2z) = 1 - (1 + p_2) z + p_2 z^2
//   F_{3,n}(w) = (1 + p_2) F_{3,n-1}(w) - p_2 F_{3,n-2}(w) + (w-1) \prod_{i=1}^{3} p_i^{k_i} F_{3,n-k}(w)
std::string expansion_text(std::size_t ell);
std::string recurrence_text(std::size_t ell);

// Runs a recurrence forward; the table is in probability mode.
DistributionTable distribution_from_recurrence(const PatternSpec& spec, const RecurrenceSpec& rec, std::size_t n);

// All tables for lengths 0..n_max from one pass of the recurrence.
std::vector<DistributionTable> distributions_up_to(const PatternSpec& spec, const RecurrenceSpec& rec, std::size_t n_max);
std::vector<DistributionTable> distributions_up_to(const PatternSpec& spec, const ProbModel& probs, std::size_t n_max);

DistributionTable distribution(const PatternSpec& spec, const ProbModel& probs, std::size_t n);

// Tables read from z-series coefficients (e.g. the output of series_coeffs).
// Throws std::logic_error if a coefficient has more occurrences than fit.
std::vector<DistributionTable> tables_from_series(const PatternSpec& spec, std::span<const PolyW> coeffs, TableMode mode);

// Exact sequence counts for equiprobable states; values sum to l^n.
DistributionTable counts_iid(const PatternSpec& spec, std::size_t n);
std::vector<DistributionTable> counts_iid_up_to(const PatternSpec& spec, std::size_t n_max);

// dG/dw at w = 1, whose z^n coefficient is the mean occurrence count.
RationalGF mean_gf(const RationalGF& g);

// Mean occurrence count for length n, by coefficient extraction from dG/dw.
BigRational expected_count(const PatternSpec& spec, const ProbModel& probs, std::size_t n);

// The part of the mean that grows linearly in n:
// prod p_i^{k_i} (n - k + 1) / prod_{i=2}^{l-1} (1 - p_i). Requires n >= k.
BigRational expected_count_principal(const PatternSpec& spec, const ProbModel& probs, std::size_t n);

// Closed-form mean for three states:
// p_1^{k_1} p_2^{k_2} p_3^{k_3} [ (n-k+1)/(1-p_2) - p_2 (1 - p_2^{n-k+1}) / (1-p_2)^2 ].
BigRational mean_closed_form_ell3(const PatternSpec& spec, const ProbModel& probs, std::size_t n);

// Closed-form mean for three equiprobable states:
// 3^{-n} [ 1/4 + (1/4)(1 + 2n - 2k) 3^{n-k+1} ].
BigRational mean_closed_form_iid_ell3(const PatternSpec& spec, std::size_t n);

namespace detail {

// Run blocks with an arbitrary per-symbol weight (probability, or 1 for counting).
BlockGFs run_blocks(unsigned k, const BigRational& weight);

// Right-end closed form over the first thresholds.size() states with the given weights.
RightEndGFs right_end_closed(std::span<const unsigned> thresholds, std::span<const BigRational> weights);

}  // namespace detail

}  // namespace runsgf
