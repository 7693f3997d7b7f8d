#include "laddermat/derivation.hpp"

#include "laddermat/error.hpp"
#include "laddermat/linalg.hpp"

namespace laddermat {

Endomap::Endomap(std::shared_ptr<const MatrixLieAlgebra> host, Mat matrix)
    : host_(std::move(host)), matrix_(std::move(matrix)) {
  if (!host_) throw AlgebraMismatch("endomap without a host algebra");
  if (matrix_.rows() != host_->dim() || matrix_.cols() != host_->dim()) {
    throw DimensionMismatch("endomap matrix does not match the host dimension");
  }
}

Endomap Endomap::zero(std::shared_ptr<const MatrixLieAlgebra> host) {
  const std::size_t d = host->dim();
  Mat m(host->field(), d, d);
  return Endomap(std::move(host), std::move(m));
}

Endomap Endomap::from_images(std::shared_ptr<const MatrixLieAlgebra> host, const std::vector<Vec>& images) {
  const std::size_t d = host->dim();
  if (images.size() != d) throw DimensionMismatch("one image per basis element is required");
  Mat m(host->field(), d, d);
  for (std::size_t c = 0; c < d; ++c) {
    if (images[c].size() != d) throw DimensionMismatch("image coordinate length");
    for (std::size_t k = 0; k < d; ++k) m(k, c) = images[c][k];
  }
  return Endomap(std::move(host), std::move(m));
}

Endomap Endomap::from_matrix_images(std::shared_ptr<const MatrixLieAlgebra> host, const std::vector<Mat>& images) {
  std::vector<Vec> coords;
  coords.reserve(images.size());
  for (const Mat& m : images) coords.push_back(host->coordinates_in_span(m));
  return from_images(std::move(host), coords);
}

Endomap Endomap::from_flat(std::shared_ptr<const MatrixLieAlgebra> host, std::span<const FieldScalar> flat) {
  const std::size_t d = host->dim();
  if (flat.size() != d * d) throw DimensionMismatch("flattened endomap length");
  Mat m = Mat::from_entries(host->field(), d, d, Vec(flat.begin(), flat.end()));
  return Endomap(std::move(host), std::move(m));
}

Mat Endomap::apply(const Mat& m) const { return host_->matrix_of(apply(host_->coordinates_in_span(m))); }

Endomap commutator(const Endomap& f, const Endomap& g) {
  if (f.host() != g.host() && !(*f.host() == *g.host())) throw AlgebraMismatch("endomaps on different algebras");
  return Endomap(f.host(), f.matrix() * g.matrix() - g.matrix() * f.matrix());
}

Endomap adjoint(const std::shared_ptr<const MatrixLieAlgebra>& host, const Mat& x) {
  std::vector<Mat> images;
  images.reserve(host->dim());
  for (const Mat& e : host->basis()) images.push_back(commutator(x, e));
  return Endomap::from_matrix_images(host, images);
}

bool is_derivation(const Endomap& f) {
  const MatrixLieAlgebra& g = *f.host();
  const std::size_t d = g.dim();
  std::vector<Vec> images(d);
  std::vector<Vec> units(d);
  for (std::size_t c = 0; c < d; ++c) {
    images[c] = f.image(c);
    units[c] = zero_vector(g.field(), d);
    units[c][c] = g.field().one();
  }
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = a + 1; b < d; ++b) {
      Vec lhs = zero_vector(g.field(), d);
      for (const auto& [c, coef] : g.structure(a, b)) axpy(lhs, coef, images[c]);
      Vec rhs = g.bracket(images[a], units[b]);
      const Vec right = g.bracket(units[a], images[b]);
      axpy(rhs, g.field().one(), right);
      if (lhs != rhs) return false;
    }
  }
  return true;
}

Subspace derivation_space(const MatrixLieAlgebra& g) {
  const std::size_t d = g.dim();
  const Field f = g.field();
  // right[b][k]: (m, C_mb^k) for every nonzero C_mb^k.
  std::vector<std::vector<SparseVec>> right(d, std::vector<SparseVec>(d));
  for (std::size_t m = 0; m < d; ++m)
    for (std::size_t b = 0; b < d; ++b)
      for (const auto& [k, coef] : g.structure(m, b)) right[b][k].emplace_back(m, coef);

  // Row (a,b,k): sum_c C_ab^c x_{k,c} - sum_m C_mb^k x_{m,a} - sum_m C_am^k x_{m,b} = 0,
  // using C_am^k = -C_ma^k.
  SparseSystem system(f, d * d);
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = a + 1; b < d; ++b) {
      const SparseVec& ab = g.structure(a, b);
      for (std::size_t k = 0; k < d; ++k) {
        if (ab.empty() && right[b][k].empty() && right[a][k].empty()) continue;
        std::vector<SparseSystem::Entry> row;
        for (const auto& [c, coef] : ab) row.emplace_back(k * d + c, coef);
        for (const auto& [m, coef] : right[b][k]) row.emplace_back(m * d + a, -coef);
        for (const auto& [m, coef] : right[a][k]) row.emplace_back(m * d + b, coef);
        system.add_row(std::move(row));
      }
    }
  }
  return system.kernel();
}

namespace {

void require_dut(const LadderAlgebra& algebra) {
  if (algebra.empty()) throw HypothesisViolated("the ladder is empty");
  if (!classify(algebra.ladder()).dut) throw HypothesisViolated("ladder " + algebra.ladder().to_string() + " is not DUT");
}

void require_host(const Endomap& f, const MatrixLieAlgebra& g) {
  if (f.host().get() != &g && !(*f.host() == g)) throw AlgebraMismatch("endomap is not defined on this algebra");
}

Mat unit_matrix(const Field& field, int n, IndexPair p) {
  return Mat::unit(field, static_cast<std::size_t>(n), static_cast<std::size_t>(p.row - 1),
                   static_cast<std::size_t>(p.col - 1));
}

// Centralizer used to reduce X: the closed form for DUT ladders.
Subspace reduction_centralizer(const LadderAlgebra& algebra) {
  return classify(algebra.ladder()).dut ? centralizer_closed_form(algebra) : centralizer_brute_force(algebra);
}

Mat reduce_modulo(const Subspace& c, const Mat& x) {
  const Vec r = c.reduce(flatten(x));
  return unflatten(x.field(), static_cast<int>(x.rows()), r);
}

std::size_t block_ut_dim(const BlockPartition& p) {
  std::size_t sum = 0;
  for (int i = 0; i < p.t; ++i)
    for (int j = i; j < p.t; ++j) sum += static_cast<std::size_t>(p.sizes[i]) * p.sizes[j];
  return sum;
}

}  // namespace

Subspace inner_space(const LadderAlgebra& algebra) {
  require_dut(algebra);
  std::vector<Vec> rows;
  for (const IndexPair p : index_set(block_ladder(algebra.partition()))) {
    rows.push_back(adjoint(algebra.lie(), unit_matrix(algebra.field(), algebra.n(), p)).flat());
  }
  return Subspace::span(algebra.field(), algebra.dim() * algebra.dim(), rows);
}

Subspace centralizer_in_algebra(const LadderAlgebra& algebra) {
  return centralizer_closed_form(algebra).intersect(algebra.lie()->span_in_gl());
}

std::vector<Endomap> dee_basis(const LadderAlgebra& algebra) {
  require_dut(algebra);
  const Subspace z = centralizer_in_algebra(algebra);
  const Field f = algebra.field();
  const int n = algebra.n();
  const BlockPartition& part = algebra.partition();
  std::vector<Endomap> out;
  for (const int k : algebra.diagonal_blocks()) {
    for (std::size_t r = 0; r < z.dim(); ++r) {
      const Vec zc = algebra.lie()->coordinates_in_span(unflatten(f, n, z.basis().row(r)));
      Endomap d = Endomap::zero(algebra.lie());
      Mat m = d.matrix();
      for (int p = part.block_begin(k); p <= part.block_end(k); ++p) {
        const std::size_t c = *algebra.index_of({p, p});
        for (std::size_t row = 0; row < zc.size(); ++row) m(row, c) = zc[row];
      }
      out.emplace_back(algebra.lie(), std::move(m));
    }
  }
  return out;
}

Subspace dee_space(const LadderAlgebra& algebra) {
  std::vector<Vec> rows;
  for (const Endomap& d : dee_basis(algebra)) rows.push_back(d.flat());
  return Subspace::span(algebra.field(), algebra.dim() * algebra.dim(), rows);
}

std::string to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::block_ut: return "block_ut";
    case CaseTag::end_block_present: return "end_block_present";
    case CaseTag::both_ends_absent: return "both_ends_absent";
  }
  return "unknown";
}

CaseTag case_of(const LadderAlgebra& algebra) {
  require_dut(algebra);
  if (classify(algebra.ladder()).block_form_equal) return CaseTag::block_ut;
  return both_end_blocks_absent(algebra) ? CaseTag::both_ends_absent : CaseTag::end_block_present;
}

PredictedDimension predicted_der_dim(const LadderAlgebra& algebra) {
  if (algebra.field().characteristic() == 2) throw HypothesisViolated("characteristic 2");
  const CaseTag tag = case_of(algebra);
  const BlockPartition& part = algebra.partition();
  const std::size_t nb = block_ut_dim(part);
  const std::size_t corner = static_cast<std::size_t>(part.sizes.front()) * part.sizes.back();
  const std::size_t diag = algebra.diagonal_blocks().size();
  switch (tag) {
    case CaseTag::block_ut: return {nb - 1 + static_cast<std::size_t>(part.t), tag};
    case CaseTag::end_block_present: return {nb - 1, tag};
    case CaseTag::both_ends_absent: return {nb - 1 - corner + diag * corner, tag};
  }
  return {0, tag};
}

namespace {

Mat system_decompose(const LadderAlgebra& algebra, const IndexSet& normal) {
  const Field field = algebra.field();
  std::vector<Vec> columns;
  for (const IndexPair u : normal) columns.push_back(adjoint(algebra.lie(), unit_matrix(field, algebra.n(), u)).flat());
  for (const Endomap& d : dee_basis(algebra)) columns.push_back(d.flat());
  const std::size_t rows = algebra.dim() * algebra.dim();
  Mat system(field, rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (std::size_t r = 0; r < rows; ++r) system(r, c) = columns[c][r];
  return system;
}

Mat matrix_from_coords(const Field& field, int n, const IndexSet& support, const Vec& coords) {
  Mat x(field, static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (std::size_t u = 0; u < support.size(); ++u) {
    x(static_cast<std::size_t>(support[u].row - 1), static_cast<std::size_t>(support[u].col - 1)) = coords[u];
  }
  return x;
}

}  // namespace

Decomposer::Decomposer(const LadderAlgebra& algebra)
    : algebra_(algebra),
      tag_(case_of(algebra)),
      normal_(index_set(block_ladder(algebra.partition()))),
      centralizer_(reduction_centralizer(algebra)),
      dee_(dee_space(algebra)),
      solver_(system_decompose(algebra, normal_)) {}

DerDecomposition Decomposer::operator()(const Endomap& f) const {
  require_host(f, *algebra_.lie());
  const Field field = algebra_.field();
  const BlockPartition& part = algebra_.partition();
  const auto solution = solver_.solve(f.flat());
  if (!solution) throw NotInDecomposition("f is not ad X + d with X in N and d in D");

  const Mat x = matrix_from_coords(field, algebra_.n(), normal_, *solution);
  DerDecomposition dec{reduce_modulo(centralizer_, x), Endomap::zero(algebra_.lie()), tag_, {}, {}};
  dec.d_part = Endomap(algebra_.lie(), f.matrix() - adjoint(algebra_.lie(), dec.x_rep).matrix());
  if (!dee_.contains(dec.d_part.flat())) throw NotInDecomposition("residual is outside D");

  for (const int k : algebra_.diagonal_blocks()) {
    const int p = part.block_begin(k);
    const Mat z = algebra_.lie()->matrix_of(dec.d_part.image(*algebra_.index_of({p, p})));
    if (tag_ == CaseTag::block_ut) {
      dec.c.emplace_back(k, z(0, 0));
    } else if (tag_ == CaseTag::both_ends_absent) {
      const auto r0 = static_cast<std::size_t>(part.block_begin(1) - 1);
      const auto c0 = static_cast<std::size_t>(part.block_begin(part.t) - 1);
      Mat y(field, static_cast<std::size_t>(part.sizes.front()), static_cast<std::size_t>(part.sizes.back()));
      for (std::size_t i = 0; i < y.rows(); ++i)
        for (std::size_t j = 0; j < y.cols(); ++j) y(i, j) = z(r0 + i, c0 + j);
      dec.y.push_back(BlockParameter{k, std::move(y)});
    }
  }
  return dec;
}

DerDecomposition decompose(const Endomap& f, const LadderAlgebra& algebra) { return Decomposer(algebra)(f); }

Endomap recompose(const DerDecomposition& dec, const LadderAlgebra& algebra) {
  const Field field = algebra.field();
  const auto n = static_cast<std::size_t>(algebra.n());
  Mat total = adjoint(algebra.lie(), dec.x_rep).matrix();
  const BlockPartition& part = algebra.partition();
  auto add_trace_map = [&](int k, const Mat& z) {
    const Vec zc = algebra.lie()->coordinates_in_span(z);
    for (int p = part.block_begin(k); p <= part.block_end(k); ++p) {
      const std::size_t c = *algebra.index_of({p, p});
      for (std::size_t r = 0; r < zc.size(); ++r) total(r, c) += zc[r];
    }
  };
  for (const auto& [k, ck] : dec.c) add_trace_map(k, Mat::identity(field, n) * ck);
  for (const BlockParameter& bp : dec.y) {
    Mat z(field, n, n);
    const auto r0 = static_cast<std::size_t>(part.block_begin(1) - 1);
    const auto c0 = static_cast<std::size_t>(part.block_begin(part.t) - 1);
    for (std::size_t i = 0; i < bp.y.rows(); ++i)
      for (std::size_t j = 0; j < bp.y.cols(); ++j) z(r0 + i, c0 + j) = bp.y(i, j);
    add_trace_map(bp.k, z);
  }
  return Endomap(algebra.lie(), std::move(total));
}

bool check_dominance(const Endomap& f, const LadderAlgebra& algebra) {
  require_host(f, *algebra.lie());
  if (algebra.empty()) return true;
  const BlockPartition& part = algebra.partition();
  for (std::size_t c = 0; c < algebra.dim(); ++c) {
    const IndexPair src = part.block_of(algebra.basis()[c]);
    for (std::size_t k = 0; k < algebra.dim(); ++k) {
      if (f.matrix()(k, c).is_zero()) continue;
      const IndexPair dst = part.block_of(algebra.basis()[k]);
      if (!dominates(src, dst)) return false;
    }
  }
  return true;
}

std::shared_ptr<const MatrixLieAlgebra> core_algebra(const LadderAlgebra& algebra) {
  const Ladder core = sdut_core(algebra.ladder());
  if (core.empty()) return std::make_shared<const MatrixLieAlgebra>(algebra.field(), algebra.n(), std::vector<Mat>{});
  return LadderAlgebra::build(core, algebra.field()).traceless_algebra();
}

Endomap restrict_to_core(const Endomap& f, const LadderAlgebra& algebra) {
  require_host(f, *algebra.lie());
  auto core = core_algebra(algebra);
  std::vector<Vec> images;
  for (const Mat& b : core->basis()) {
    const Mat image = f.apply(b);
    auto c = core->coordinates(image);
    if (!c) throw StabilityViolation("f does not preserve the core of " + algebra.ladder().to_string());
    images.push_back(std::move(*c));
  }
  return Endomap::from_images(std::move(core), images);
}

namespace {

Mat system_extend(const LadderAlgebra& algebra, const MatrixLieAlgebra& h, const IndexSet& normal) {
  const Field field = algebra.field();
  const int n = algebra.n();
  const std::size_t n2 = static_cast<std::size_t>(n) * n;
  // sum_u x_u vec([E_u, B_c]) = vec(f(B_c)) for every basis element B_c of h.
  Mat system(field, h.dim() * n2, normal.size());
  for (std::size_t c = 0; c < h.dim(); ++c) {
    for (std::size_t u = 0; u < normal.size(); ++u) {
      const Vec col = flatten(commutator(unit_matrix(field, n, normal[u]), h.basis_element(c)));
      for (std::size_t r = 0; r < n2; ++r) system(c * n2 + r, u) = col[r];
    }
  }
  return system;
}

const std::shared_ptr<const MatrixLieAlgebra>& checked_core(const LadderAlgebra& algebra,
                                                            const std::shared_ptr<const MatrixLieAlgebra>& core) {
  if (algebra.empty()) throw HypothesisViolated("the ladder is empty");
  if (!core || core->n() != algebra.n() || core->field() != algebra.field()) {
    throw AlgebraMismatch("core algebra does not match the ladder");
  }
  return core;
}

}  // namespace

CoreExtender::CoreExtender(const LadderAlgebra& algebra, std::shared_ptr<const MatrixLieAlgebra> core)
    : algebra_(algebra),
      core_(checked_core(algebra, core)),
      normal_(index_set(block_ladder(algebra.partition()))),
      centralizer_(reduction_centralizer(algebra)),
      solver_(system_extend(algebra, *core_, normal_)) {}

Extension CoreExtender::operator()(const Endomap& f) const {
  require_host(f, *core_);
  const MatrixLieAlgebra& h = *core_;
  const std::size_t n2 = static_cast<std::size_t>(algebra_.n()) * algebra_.n();
  Vec rhs = zero_vector(h.field(), h.dim() * n2);
  for (std::size_t c = 0; c < h.dim(); ++c) {
    const Vec target = flatten(h.matrix_of(f.image(c)));
    for (std::size_t r = 0; r < n2; ++r) rhs[c * n2 + r] = target[r];
  }
  const auto solution = solver_.solve(rhs);
  if (!solution) throw NoAdjointWitness("no X in M_{L_B} restricts to f");

  const Mat x = reduce_modulo(centralizer_, matrix_from_coords(h.field(), algebra_.n(), normal_, *solution));
  for (std::size_t c = 0; c < h.dim(); ++c) {
    if (commutator(x, h.basis_element(c)) != h.matrix_of(f.image(c))) {
      throw NoAdjointWitness("reduced witness does not restrict to f");
    }
  }
  return Extension{x, adjoint(algebra_.lie(), x)};
}

Extension extend_from_core(const Endomap& f, const LadderAlgebra& algebra) {
  return CoreExtender(algebra, f.host())(f);
}

Subspace solve_intertwiner(int m, int n, const Field& field) {
  if (m < 1 || n < 1) throw DimensionMismatch("intertwiner sizes must be positive");
  const auto mm = static_cast<std::size_t>(m);
  const auto nn = static_cast<std::size_t>(n);
  const std::size_t unknowns = mm * mm + nn * nn;
  // (X E_ij - E_ij Y)_pq = X_pi [j = q] - [p = i] Y_jq.
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < mm; ++i)
    for (std::size_t j = 0; j < nn; ++j)
      for (std::size_t p = 0; p < mm; ++p)
        for (std::size_t q = 0; q < nn; ++q) {
          Vec row = zero_vector(field, unknowns);
          if (j == q) row[p * mm + i] += field.one();
          if (p == i) row[mm * mm + j * nn + q] -= field.one();
          if (!is_zero(row)) rows.push_back(std::move(row));
        }
  return kernel(Mat::from_rows(field, unknowns, rows));
}

}  // namespace laddermat
