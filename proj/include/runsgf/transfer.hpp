#pragma once

#include <cstddef>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "runsgf/rational_gf.hpp"

namespace runsgf {

struct MalformedSystem : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Which formal variable the marks of a system are written in: w counts
// pattern occurrences, u tags a pattern sitting at the right end.
enum class MarkVariable { w, u };

std::string_view to_string(MarkVariable v);

/*
 * Blocks g_1..g_s and the adjacency marks between them. marks[i][j] weights
 * block i immediately followed (on the right) by block j; each entry is 0
 * (forbidden), 1 (allowed, unmarked) or the mark variable itself. The
 * diagonal must be zero: two blocks of the same kind are never adjacent.
 */
struct TransferSystem {
  std::vector<RationalGF> blocks;
  std::vector<std::vector<PolyW>> marks;
  MarkVariable mark = MarkVariable::w;

  // Throws MalformedSystem if any invariant fails.
  void validate() const;
};

// A generating function tagged with the variable its PolyW coefficients are written in.
struct MarkedGF {
  RationalGF gf;
  MarkVariable mark = MarkVariable::w;
};

// M with M_ii = 1 and M_ij = -g_i·w_ij.
GFMatrix assemble_matrix(const TransferSystem& sys);

// e·M^-1·g: every nonempty sequence of blocks, without the empty sequence.
MarkedGF system_gf(const TransferSystem& sys);

// 1 + e·M^-1·g.
MarkedGF system_gf_with_empty(const TransferSystem& sys);

// [var^degree] G as a function of the remaining variables. The denominator
// of G must not depend on var. Degrees above the numerator's return zero.
RationalGF extract_mark_coefficient(const MarkedGF& g, MarkVariable var, std::size_t degree);

}  // namespace runsgf
