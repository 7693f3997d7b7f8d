#ifndef LADDERMAT_SHAPE_HPP
#define LADDERMAT_SHAPE_HPP

#include <vector>

#include "laddermat/ladder.hpp"

namespace laddermat {

/// Partition of [n] into consecutive blocks, cut right after each `cuts` entry.
struct BlockPartition {
  int n = 0;
  std::vector<int> cuts;   // sorted, inside [n-1]
  std::vector<int> sizes;  // block sizes n_1..n_t
  int t = 0;

  static BlockPartition from_sizes(std::vector<int> sizes);
  static BlockPartition from_cuts(int n, std::vector<int> cuts);

  /// 1-based block containing 1-based row/column index i.
  int block_of(int i) const;
  /// First and last 1-based index of block k.
  int block_begin(int k) const;
  int block_end(int k) const;
  int block_size(int k) const { return sizes[k - 1]; }
  /// Block (I,J) enclosing entry p.
  IndexPair block_of(IndexPair p) const { return {block_of(p.row), block_of(p.col)}; }
  /// Entries of block (I,J), row-major.
  IndexSet entries_of_block(IndexPair block) const;

  friend bool operator==(const BlockPartition&, const BlockPartition&) = default;
};

/// gamma_L = {i_l} u {j_l - 1} - {0, n}. Throws EmptyLadder on the empty ladder.
BlockPartition partition_of(const Ladder& ladder);

/// Blocks (I,J) of partition_of(ladder) that meet I(ladder), row-major.
IndexSet block_index_set(const Ladder& ladder);

/// The ladder of block upper triangular matrices of a partition.
Ladder block_ladder(const BlockPartition& partition);

struct LadderClass {
  bool upper_triangular = false;
  bool strictly_upper_triangular = false;
  bool dut = false;
  bool sdut = false;
  /// L equals its block ladder L_B; false for the empty ladder.
  bool block_form_equal = false;
  /// DUT as read off the block shape: every present block sits on or above
  /// the diagonal, and of any two consecutive diagonal blocks at least one
  /// is present. Agrees with `dut` on every ladder.
  bool dut_by_blocks = false;
};

/// Corner inequalities: UT iff i_l < j_{l+1}; strictly UT iff i_l < j_l;
/// DUT iff j_l <= i_l for all l and UT; SDUT likewise with j_l < i_l.
LadderClass classify(const Ladder& ladder);

nlohmann::ordered_json to_json(const LadderClass& c);

}  // namespace laddermat

#endif  // LADDERMAT_SHAPE_HPP
