#include "laddermat/shape.hpp"

#include <algorithm>
#include <numeric>

#include "laddermat/error.hpp"

namespace laddermat {

BlockPartition BlockPartition::from_sizes(std::vector<int> sizes) {
  BlockPartition p;
  p.n = std::accumulate(sizes.begin(), sizes.end(), 0);
  int acc = 0;
  for (std::size_t k = 0; k + 1 < sizes.size(); ++k) {
    acc += sizes[k];
    p.cuts.push_back(acc);
  }
  p.t = static_cast<int>(sizes.size());
  p.sizes = std::move(sizes);
  return p;
}

BlockPartition BlockPartition::from_cuts(int n, std::vector<int> cuts) {
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  BlockPartition p;
  p.n = n;
  int prev = 0;
  for (int c : cuts) {
    p.sizes.push_back(c - prev);
    prev = c;
  }
  p.sizes.push_back(n - prev);
  p.cuts = std::move(cuts);
  p.t = static_cast<int>(p.sizes.size());
  return p;
}

int BlockPartition::block_of(int i) const {
  return 1 + static_cast<int>(std::lower_bound(cuts.begin(), cuts.end(), i) - cuts.begin());
}

int BlockPartition::block_begin(int k) const { return k == 1 ? 1 : cuts[k - 2] + 1; }
int BlockPartition::block_end(int k) const { return k == t ? n : cuts[k - 1]; }

IndexSet BlockPartition::entries_of_block(IndexPair block) const {
  IndexSet out;
  for (int i = block_begin(block.row); i <= block_end(block.row); ++i)
    for (int j = block_begin(block.col); j <= block_end(block.col); ++j) out.push_back({i, j});
  return out;
}

BlockPartition partition_of(const Ladder& ladder) {
  if (ladder.empty()) throw EmptyLadder("the empty ladder has no partition");
  const int n = ladder.n();
  std::vector<int> cuts;
  for (const auto& [i, j] : ladder.corners()) {
    cuts.push_back(i);
    cuts.push_back(j - 1);
  }
  std::erase_if(cuts, [n](int c) { return c == 0 || c == n; });
  return BlockPartition::from_cuts(n, std::move(cuts));
}

IndexSet block_index_set(const Ladder& ladder) {
  const BlockPartition p = partition_of(ladder);
  IndexSet blocks;
  for (const auto& e : index_set(ladder)) blocks.push_back(p.block_of(e));
  std::sort(blocks.begin(), blocks.end());
  blocks.erase(std::unique(blocks.begin(), blocks.end()), blocks.end());
  return blocks;
}

Ladder block_ladder(const BlockPartition& partition) {
  std::vector<IndexPair> corners;
  for (int k = 1; k <= partition.t; ++k) {
    corners.push_back({partition.block_end(k), partition.block_begin(k)});
  }
  return Ladder(partition.n, std::move(corners));
}

LadderClass classify(const Ladder& ladder) {
  const auto& cs = ladder.corners();
  LadderClass c;
  c.upper_triangular = true;
  c.strictly_upper_triangular = true;
  bool weak_below = true;    // j_l <= i_l for all l
  bool strict_below = true;  // j_l < i_l for all l
  for (std::size_t l = 0; l < cs.size(); ++l) {
    if (l + 1 < cs.size() && !(cs[l].row < cs[l + 1].col)) c.upper_triangular = false;
    if (!(cs[l].row < cs[l].col)) c.strictly_upper_triangular = false;
    if (!(cs[l].col <= cs[l].row)) weak_below = false;
    if (!(cs[l].col < cs[l].row)) strict_below = false;
  }
  c.dut = c.upper_triangular && weak_below;
  c.sdut = c.upper_triangular && strict_below;

  if (ladder.empty()) {
    c.dut_by_blocks = true;
    return c;
  }
  const BlockPartition p = partition_of(ladder);
  const IndexSet blocks = block_index_set(ladder);
  c.block_form_equal = (ladder == block_ladder(p));
  const bool blocks_upper =
      std::all_of(blocks.begin(), blocks.end(), [](IndexPair b) { return b.row <= b.col; });
  bool adjacent = true;
  for (int k = 1; k < p.t; ++k) {
    if (!contains(blocks, {k, k}) && !contains(blocks, {k + 1, k + 1})) adjacent = false;
  }
  c.dut_by_blocks = blocks_upper && adjacent;
  return c;
}

nlohmann::ordered_json to_json(const LadderClass& c) {
  nlohmann::ordered_json j;
  j["upper_triangular"] = c.upper_triangular;
  j["strictly_upper_triangular"] = c.strictly_upper_triangular;
  j["dut"] = c.dut;
  j["sdut"] = c.sdut;
  j["block_form_equal"] = c.block_form_equal;
  j["dut_by_blocks"] = c.dut_by_blocks;
  return j;
}

}  // namespace laddermat
