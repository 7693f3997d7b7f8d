#ifndef LADDERMAT_LADDER_HPP
#define LADDERMAT_LADDER_HPP

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace laddermat {

/// 1-based (row, column) position in [n]x[n]. Ordered row-major.
struct IndexPair {
  int row = 0;
  int col = 0;
  friend auto operator<=>(const IndexPair&, const IndexPair&) = default;
};

/// p dominates q iff p.row >= q.row and p.col <= q.col.
bool dominates(IndexPair p, IndexPair q);

/// Sorted (row-major) set of index pairs.
using IndexSet = std::vector<IndexPair>;
bool contains(const IndexSet& set, IndexPair p);

/// A ladder of size n: corners with strictly increasing rows and columns.
/// The empty ladder is valid and describes the zero algebra.
class Ladder {
 public:
  Ladder() = default;
  /// Throws InvalidLadder unless rows and columns strictly increase inside [n]x[n].
  Ladder(int n, std::vector<IndexPair> corners);

  /// Grammar `n=<int>: (<i>,<j>)*`, e.g. `n=7: (1,1) (4,3) (5,5)`.
  static Ladder parse(std::string_view text);
  static Ladder from_json(const nlohmann::ordered_json& j);

  int n() const { return n_; }
  const std::vector<IndexPair>& corners() const { return corners_; }
  std::size_t step() const { return corners_.size(); }
  bool empty() const { return corners_.empty(); }

  std::string to_string() const;
  nlohmann::ordered_json to_json() const;

  friend bool operator==(const Ladder&, const Ladder&) = default;
  friend auto operator<=>(const Ladder&, const Ladder&) = default;

 private:
  int n_ = 0;
  std::vector<IndexPair> corners_;
};

std::ostream& operator<<(std::ostream& os, const Ladder& l);

/// I(L): every pair dominated by some corner, row-major.
IndexSet index_set(const Ladder& ladder);

/// Recovers the ladder whose index set is `set` (corners are the maximal
/// elements under dominance). Throws NotALadderShape when `set` is not closed
/// toward smaller rows and larger columns.
Ladder canonicalize(int n, const IndexSet& set);

}  // namespace laddermat

#endif  // LADDERMAT_LADDER_HPP
