#pragma once

#include <cstddef>

#include "runsgf/patterns.hpp"
#include "runsgf/transfer.hpp"

namespace runsgf {

/*
 * Transfer systems that build the pattern one state at a time.
 *
 * Both take the right-end pair (H, H') for states 1..j-1 and the run blocks
 * (g', g) of state j, giving the block vector [H', H, g', g]. Blocks of the
 * same family are never adjacent (H'·H, g'·g and the reverse are forbidden),
 * so every block is maximal.
 *
 * pattern_system: 4x4, the adjacency H·g carries `occurrence_mark`.
 * right_end_system: 5x5, a fifth copy of g that must end the sequence; H
 * followed by it carries u, so [u^1] of its function is the right-end GF for
 * states 1..j.
 *
 * For j = 2 the prefix pair is simply (g_1, g_1'): a single run of 1's is "at
 * the right end" exactly when it is long.
 */
TransferSystem pattern_system(const RightEndGFs& prefix, const BlockGFs& last,
                              const PolyW& occurrence_mark = PolyW::variable());
TransferSystem right_end_system(const RightEndGFs& prefix, const BlockGFs& last);

// (H, H') over states 1..prefix computed by iterating right_end_system.
// H' is the unrestricted sequence GF (from pattern_system with the mark set
// to 1) minus H.
RightEndGFs right_end_gf_engine(const PatternSpec& spec, const ProbModel& probs, std::size_t prefix = 0);
RightEndGFs right_end_gf_engine_iid(const PatternSpec& spec, std::size_t prefix = 0);

// G(w, z) from the transfer engine, empty sequence included.
RationalGF pattern_gf_engine(const PatternSpec& spec, const ProbModel& probs);
RationalGF pattern_gf_engine_iid(const PatternSpec& spec);

}  // namespace runsgf
