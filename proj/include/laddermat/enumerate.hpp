#ifndef LADDERMAT_ENUMERATE_HPP
#define LADDERMAT_ENUMERATE_HPP

#include <cstdint>
#include <vector>

#include "laddermat/ladder.hpp"
#include "laddermat/shape.hpp"

namespace laddermat {

/// Every ladder of size n, including the empty one, in a fixed order
/// (by step, then lexicographically by corners).
std::vector<Ladder> all_ladders(int n);

/// All compositions of n (ordered block sizes), lexicographic.
std::vector<std::vector<int>> compositions(int n);

/// Subsets of [t] (bitmask, bit k-1 = block k) with no two consecutive blocks.
std::vector<std::uint32_t> nonconsecutive_subsets(int t);

/// The ladder obtained from the block upper triangular shape of `partition`
/// after deleting the diagonal blocks in `removed` (bitmask).
Ladder remove_diagonal_blocks(const BlockPartition& partition, std::uint32_t removed);

/// Distinct DUT ladder-matrix sets in M_n, the empty ladder included, sorted.
/// Built from every composition and every admissible removal set, then
/// deduplicated by index set.
std::vector<Ladder> enumerate_dut(int n);

/// F_1 = F_2 = 1; integer recurrence.
std::uint64_t fibonacci(int k);
/// F_{2n+1}.
std::uint64_t count_dut(int n);
/// F_{t+2}.
std::uint64_t count_dut_block_forms(int t);

}  // namespace laddermat

#endif  // LADDERMAT_ENUMERATE_HPP
