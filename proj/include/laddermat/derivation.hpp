#ifndef LADDERMAT_DERIVATION_HPP
#define LADDERMAT_DERIVATION_HPP

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "laddermat/ladder_algebra.hpp"
#include "laddermat/lie_algebra.hpp"
#include "laddermat/linalg.hpp"

namespace laddermat {

/// A linear endomorphism of a matrix Lie algebra g. matrix()(k, c) is the
/// coefficient of e_k in f(e_c); flattened coordinates are row-major (k*d + c).
class Endomap {
 public:
  Endomap(std::shared_ptr<const MatrixLieAlgebra> host, Mat matrix);

  static Endomap zero(std::shared_ptr<const MatrixLieAlgebra> host);
  /// images[c] = coordinates of f(e_c).
  static Endomap from_images(std::shared_ptr<const MatrixLieAlgebra> host, const std::vector<Vec>& images);
  /// images[c] = f(e_c) as an n x n matrix; throws NotBracketClosed when one leaves g.
  static Endomap from_matrix_images(std::shared_ptr<const MatrixLieAlgebra> host, const std::vector<Mat>& images);
  static Endomap from_flat(std::shared_ptr<const MatrixLieAlgebra> host, std::span<const FieldScalar> flat);

  const std::shared_ptr<const MatrixLieAlgebra>& host() const { return host_; }
  const Mat& matrix() const { return matrix_; }
  std::size_t dim() const { return matrix_.rows(); }
  Vec flat() const { return matrix_.entries(); }

  Vec apply(const Vec& coords) const { return matrix_ * coords; }
  Mat apply(const Mat& m) const;
  /// Coordinates of f(e_c).
  Vec image(std::size_t c) const { return matrix_.column_vector(c); }

  friend bool operator==(const Endomap& a, const Endomap& b) { return a.matrix_ == b.matrix_; }

 private:
  std::shared_ptr<const MatrixLieAlgebra> host_;
  Mat matrix_;
};

/// f g - g f.
Endomap commutator(const Endomap& f, const Endomap& g);

/// ad X restricted to g. Throws NotBracketClosed when [X, g] leaves g.
Endomap adjoint(const std::shared_ptr<const MatrixLieAlgebra>& host, const Mat& x);

/// The derivation law on every basis pair.
bool is_derivation(const Endomap& f);

/// Der(g) in flattened endomap coordinates (ambient d^2).
Subspace derivation_space(const MatrixLieAlgebra& g);

/// ad(N/C)|_{M_L} spanned by ad E_p over p in I(L_B). Requires DUT, non-empty.
Subspace inner_space(const LadderAlgebra& algebra);

/// Basis of D: A -> tr(A_kk) z for present diagonal blocks k and z in a basis of C n M_L.
std::vector<Endomap> dee_basis(const LadderAlgebra& algebra);
Subspace dee_space(const LadderAlgebra& algebra);

/// C(M_L) n M_L in F^{n^2}.
Subspace centralizer_in_algebra(const LadderAlgebra& algebra);

enum class CaseTag { block_ut, end_block_present, both_ends_absent };
std::string to_string(CaseTag tag);

/// Shape case of a non-empty DUT ladder. Throws HypothesisViolated otherwise.
CaseTag case_of(const LadderAlgebra& algebra);

struct PredictedDimension {
  std::size_t dim = 0;
  CaseTag case_tag = CaseTag::block_ut;
};

/// Closed-form dim Der(M_L). Throws HypothesisViolated for char 2 or a
/// ladder that is empty or not DUT.
PredictedDimension predicted_der_dim(const LadderAlgebra& algebra);

struct BlockParameter {
  int k = 0;  // diagonal block
  Mat y;      // n_1 x n_t block Y_1tk
};

struct DerDecomposition {
  Mat x_rep;  // X in M_{L_B}, reduced modulo C(M_L)
  Endomap d_part;
  CaseTag case_tag = CaseTag::block_ut;
  std::vector<std::pair<int, FieldScalar>> c;  // (k, c_k), block_ut only
  std::vector<BlockParameter> y;               // both_ends_absent only
};

/// f = ad X + d with X in M_{L_B} and d in D. Throws NotInDecomposition when
/// no such pair exists, HypothesisViolated when L is empty or not DUT.
DerDecomposition decompose(const Endomap& f, const LadderAlgebra& algebra);

/// decompose() with the joint system factored once per ladder.
class Decomposer {
 public:
  explicit Decomposer(const LadderAlgebra& algebra);
  DerDecomposition operator()(const Endomap& f) const;

 private:
  LadderAlgebra algebra_;
  CaseTag tag_;
  IndexSet normal_;
  Subspace centralizer_;
  Subspace dee_;
  LinearSolver solver_;
};

/// ad x_rep + sum_k tr(A_kk) (c_k I_n or Y~_1tk or the stored d_part).
Endomap recompose(const DerDecomposition& dec, const LadderAlgebra& algebra);

/// Every basis element in block (I,J) maps into blocks (I',J') with I' <= I and J' >= J.
bool check_dominance(const Endomap& f, const LadderAlgebra& algebra);

/// f restricted to M_{L_*}^0 (the traceless algebra of the core, with its
/// canonical basis). Throws StabilityViolation when f does not preserve it.
Endomap restrict_to_core(const Endomap& f, const LadderAlgebra& algebra);

/// The traceless algebra of sdut_core(L), embedded in n x n matrices.
std::shared_ptr<const MatrixLieAlgebra> core_algebra(const LadderAlgebra& algebra);

struct Extension {
  Mat x;           // X in M_{L_B}, reduced modulo C(M_L)
  Endomap f_plus;  // ad X on M_L
};

/// Finds X in M_{L_B} with [X, B] = f(B) on the host of f. Throws
/// NoAdjointWitness when none exists, HypothesisViolated when L is empty.
Extension extend_from_core(const Endomap& f, const LadderAlgebra& algebra);

/// extend_from_core() for maps on a fixed host, factored once.
class CoreExtender {
 public:
  CoreExtender(const LadderAlgebra& algebra, std::shared_ptr<const MatrixLieAlgebra> core);
  Extension operator()(const Endomap& f) const;

 private:
  LadderAlgebra algebra_;
  std::shared_ptr<const MatrixLieAlgebra> core_;
  IndexSet normal_;
  Subspace centralizer_;
  LinearSolver solver_;
};

/// {(X, Y) : X A = A Y for all A in M_{m x n}} in F^{m^2 + n^2}, X first.
Subspace solve_intertwiner(int m, int n, const Field& field);

}  // namespace laddermat

#endif  // LADDERMAT_DERIVATION_HPP
