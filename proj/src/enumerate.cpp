#include "laddermat/enumerate.hpp"

#include <algorithm>
#include <map>

#include "laddermat/error.hpp"

namespace laddermat {

namespace {

void choose(int n, int k, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int v = start; v <= n; ++v) {
    cur.push_back(v);
    choose(n, k, v + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Ladder> all_ladders(int n) {
  std::vector<Ladder> out;
  for (int s = 0; s <= n; ++s) {
    std::vector<std::vector<int>> subsets;
    std::vector<int> cur;
    choose(n, s, 1, cur, subsets);
    for (const auto& rows : subsets) {
      for (const auto& cols : subsets) {
        std::vector<IndexPair> corners;
        for (int k = 0; k < s; ++k) corners.push_back({rows[k], cols[k]});
        out.emplace_back(n, std::move(corners));
      }
    }
  }
  return out;
}

std::vector<std::vector<int>> compositions(int n) {
  std::vector<std::vector<int>> out;
  // Bit k of mask set: cut after position k+1.
  for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
    std::vector<int> sizes;
    int last = 0;
    for (int k = 1; k < n; ++k) {
      if (mask & (1u << (k - 1))) {
        sizes.push_back(k - last);
        last = k;
      }
    }
    sizes.push_back(n - last);
    out.push_back(std::move(sizes));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint32_t> nonconsecutive_subsets(int t) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t mask = 0; mask < (1u << t); ++mask) {
    if ((mask & (mask >> 1)) == 0) out.push_back(mask);
  }
  return out;
}

Ladder remove_diagonal_blocks(const BlockPartition& partition, std::uint32_t removed) {
  IndexSet entries;
  for (int bi = 1; bi <= partition.t; ++bi) {
    for (int bj = bi; bj <= partition.t; ++bj) {
      if (bi == bj && (removed & (1u << (bi - 1)))) continue;
      for (const auto& e : partition.entries_of_block({bi, bj})) entries.push_back(e);
    }
  }
  return canonicalize(partition.n, entries);
}

std::vector<Ladder> enumerate_dut(int n) {
  if (n < 1) throw InvalidLadder("enumeration size must be positive");
  std::map<IndexSet, Ladder> unique;
  for (const auto& sizes : compositions(n)) {
    const BlockPartition p = BlockPartition::from_sizes(sizes);
    for (std::uint32_t removed : nonconsecutive_subsets(p.t)) {
      Ladder l = remove_diagonal_blocks(p, removed);
      unique.emplace(index_set(l), std::move(l));
    }
  }
  std::vector<Ladder> out;
  for (auto& [key, l] : unique) out.push_back(std::move(l));
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t fibonacci(int k) {
  std::uint64_t a = 0, b = 1;  // F_0, F_1
  for (int i = 0; i < k; ++i) {
    const std::uint64_t next = a + b;
    a = b;
    b = next;
  }
  return a;
}

std::uint64_t count_dut(int n) { return fibonacci(2 * n + 1); }
std::uint64_t count_dut_block_forms(int t) { return fibonacci(t + 2); }

}  // namespace laddermat
