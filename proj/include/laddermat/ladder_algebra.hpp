#ifndef LADDERMAT_LADDER_ALGEBRA_HPP
#define LADDERMAT_LADDER_ALGEBRA_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "laddermat/ladder.hpp"
#include "laddermat/lie_algebra.hpp"
#include "laddermat/shape.hpp"

namespace laddermat {

/// M_L: span of E_ij over I(L), basis ordered row-major. Immutable.
class LadderAlgebra {
 public:
  /// Throws NotBracketClosed for a non-upper-triangular ladder unless
  /// `allow_non_closed`, in which case the span is kept without structure
  /// constants.
  static LadderAlgebra build(const Ladder& ladder, Field field, bool allow_non_closed = false);

  const Ladder& ladder() const { return ladder_; }
  int n() const { return ladder_.n(); }
  const Field& field() const { return lie_->field(); }
  const IndexSet& basis() const { return basis_; }
  std::size_t dim() const { return basis_.size(); }
  bool empty() const { return basis_.empty(); }

  /// Throws EmptyLadder for the empty ladder.
  const BlockPartition& partition() const;
  /// [I(L)], row-major; empty for the empty ladder.
  const IndexSet& block_index_set() const { return blocks_; }
  /// Blocks k with (k,k) in [I(L)], ascending.
  const std::vector<int>& diagonal_blocks() const { return diagonal_blocks_; }

  const std::shared_ptr<const MatrixLieAlgebra>& lie() const { return lie_; }
  std::optional<std::size_t> index_of(IndexPair p) const;

  AlgebraElement element(Vec coords) const;
  /// E_p; throws DimensionMismatch when p is outside I(L).
  AlgebraElement unit(IndexPair p) const;
  /// Throws DimensionMismatch when m is not supported on I(L).
  AlgebraElement from_matrix(const Mat& m) const;

  /// M_L^0 in coordinates of M_L: one trace functional per present diagonal block.
  const Subspace& traceless() const { return traceless_; }
  /// M_L^0 with the canonical basis of traceless() as its ordered basis.
  const std::shared_ptr<const MatrixLieAlgebra>& traceless_algebra() const { return traceless_lie_; }

 private:
  Ladder ladder_;
  IndexSet basis_;
  std::optional<BlockPartition> partition_;
  IndexSet blocks_;
  std::vector<int> diagonal_blocks_;
  std::shared_ptr<const MatrixLieAlgebra> lie_;
  Subspace traceless_;
  std::shared_ptr<const MatrixLieAlgebra> traceless_lie_;
};

/// span{E_p : p in set} inside F^{n^2}.
Subspace unit_span_in_gl(const Field& field, int n, const IndexSet& set);

/// Image of s (coordinates relative to `from`) in the coordinates of `into`.
/// Throws DimensionMismatch when some element leaves `into`.
Subspace embed(const MatrixLieAlgebra& from, const Subspace& s, const MatrixLieAlgebra& into);

/// Positions of I(L) carrying a nonzero entry in some element of s.
IndexSet support(const LadderAlgebra& algebra, const Subspace& s);

/// L_*: the corners with i > j.
Ladder sdut_core(const Ladder& ladder);

/// M_L^0 in coordinates of M_L.
const Subspace& traceless_part(const LadderAlgebra& algebra);

struct DerivedTerm {
  Subspace space;                 // in coordinates of M_L
  std::optional<Ladder> ladder;   // L_k recovered from the support, k >= 1
  bool matches_traceless = false; // space == M_{L_k}^0
};

struct DerivedSeries {
  std::vector<DerivedTerm> terms;  // terms[0] = M_L, last term is the fixpoint
  bool recovered = true;           // every term with k >= 1 is some M_{L_k}^0
  bool terminal_is_core = false;   // fixpoint == M_{L_*}^0
  Ladder core;
  std::string failure;             // first recovery failure, if any
};

/// Iterates [S, S] to a fixpoint and checks the ladder shape of each term.
DerivedSeries derived_series(const LadderAlgebra& algebra);

/// Normalizer and centralizer in F^{n^2}.
Subspace normalizer_brute_force(const LadderAlgebra& algebra);
/// M_{L_B}. Throws EmptyLadder.
Subspace normalizer_closed_form(const LadderAlgebra& algebra);
Subspace centralizer_brute_force(const LadderAlgebra& algebra);
/// F I_n + M~_1t when (1,1) and (t,t) are absent, otherwise F I_n. Throws EmptyLadder.
Subspace centralizer_closed_form(const LadderAlgebra& algebra);
/// Whether the centralizer has the extra M~_1t summand.
bool both_end_blocks_absent(const LadderAlgebra& algebra);

/// ladder, dim, partition, block index set, class flags, normalizer and
/// centralizer dims, derived-series dims and terminal ladder.
nlohmann::ordered_json structure_report(const LadderAlgebra& algebra);

}  // namespace laddermat

#endif  // LADDERMAT_LADDER_ALGEBRA_HPP
