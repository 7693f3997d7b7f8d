#include "laddermat/ladder_algebra.hpp"

#include <algorithm>

#include "laddermat/error.hpp"
#include "laddermat/linalg.hpp"

namespace laddermat {

LadderAlgebra LadderAlgebra::build(const Ladder& ladder, Field field, bool allow_non_closed) {
  if (!allow_non_closed && !classify(ladder).upper_triangular) {
    throw NotBracketClosed("ladder " + ladder.to_string() + " is not upper triangular");
  }
  LadderAlgebra a;
  a.ladder_ = ladder;
  a.basis_ = index_set(ladder);
  const auto n = static_cast<std::size_t>(ladder.n());
  std::vector<Mat> mats;
  mats.reserve(a.basis_.size());
  for (const IndexPair p : a.basis_) {
    mats.push_back(Mat::unit(field, n, static_cast<std::size_t>(p.row - 1), static_cast<std::size_t>(p.col - 1)));
  }
  a.lie_ = std::make_shared<const MatrixLieAlgebra>(field, ladder.n(), std::move(mats), !allow_non_closed);

  if (!ladder.empty()) {
    a.partition_ = partition_of(ladder);
    a.blocks_ = laddermat::block_index_set(ladder);
    for (const IndexPair b : a.blocks_)
      if (b.row == b.col) a.diagonal_blocks_.push_back(b.row);
  }

  const std::size_t d = a.basis_.size();
  std::vector<Vec> functionals;
  for (const int k : a.diagonal_blocks_) {
    Vec w = zero_vector(field, d);
    for (int p = a.partition_->block_begin(k); p <= a.partition_->block_end(k); ++p) w[*a.index_of({p, p})] = field.one();
    functionals.push_back(std::move(w));
  }
  a.traceless_ = functionals.empty() ? Subspace::full(field, d) : kernel(Mat::from_rows(field, d, functionals));
  a.traceless_lie_ = subalgebra(*a.lie_, a.traceless_, false);
  return a;
}

const BlockPartition& LadderAlgebra::partition() const {
  if (!partition_) throw EmptyLadder("the empty ladder has no block partition");
  return *partition_;
}

std::optional<std::size_t> LadderAlgebra::index_of(IndexPair p) const {
  const auto it = std::lower_bound(basis_.begin(), basis_.end(), p);
  if (it == basis_.end() || *it != p) return std::nullopt;
  return static_cast<std::size_t>(it - basis_.begin());
}

AlgebraElement LadderAlgebra::element(Vec coords) const {
  if (coords.size() != dim()) throw DimensionMismatch("coordinate vector length differs from dimension");
  return AlgebraElement{lie_, std::move(coords)};
}

AlgebraElement LadderAlgebra::unit(IndexPair p) const {
  const auto k = index_of(p);
  if (!k) throw DimensionMismatch("index pair outside I(L)");
  Vec c = zero_vector(field(), dim());
  c[*k] = field().one();
  return AlgebraElement{lie_, std::move(c)};
}

AlgebraElement LadderAlgebra::from_matrix(const Mat& m) const {
  auto c = lie_->coordinates(m);
  if (!c) throw DimensionMismatch("matrix is not supported on I(L)");
  return AlgebraElement{lie_, std::move(*c)};
}

Subspace unit_span_in_gl(const Field& field, int n, const IndexSet& set) {
  const auto n2 = static_cast<std::size_t>(n) * n;
  std::vector<Vec> rows;
  for (const IndexPair p : set) {
    Vec v = zero_vector(field, n2);
    v[static_cast<std::size_t>((p.row - 1) * n + (p.col - 1))] = field.one();
    rows.push_back(std::move(v));
  }
  return Subspace::span(field, n2, rows);
}

Subspace embed(const MatrixLieAlgebra& from, const Subspace& s, const MatrixLieAlgebra& into) {
  std::vector<Vec> rows;
  for (std::size_t k = 0; k < s.dim(); ++k) {
    auto c = into.coordinates(from.matrix_of(s.basis().row(k)));
    if (!c) throw DimensionMismatch("embedded element leaves the target algebra");
    rows.push_back(std::move(*c));
  }
  return Subspace::span(into.field(), into.dim(), rows);
}

IndexSet support(const LadderAlgebra& algebra, const Subspace& s) {
  IndexSet out;
  for (std::size_t c = 0; c < algebra.dim(); ++c) {
    for (std::size_t r = 0; r < s.dim(); ++r) {
      if (!s.basis()(r, c).is_zero()) {
        out.push_back(algebra.basis()[c]);
        break;
      }
    }
  }
  return out;
}

Ladder sdut_core(const Ladder& ladder) {
  std::vector<IndexPair> corners;
  for (const IndexPair c : ladder.corners())
    if (c.row > c.col) corners.push_back(c);
  return Ladder(ladder.n(), std::move(corners));
}

const Subspace& traceless_part(const LadderAlgebra& algebra) { return algebra.traceless(); }

namespace {

// M_L^0 of `ladder`, in coordinates of `host`.
Subspace traceless_in(const LadderAlgebra& host, const Ladder& ladder) {
  if (ladder.empty()) return Subspace::zero(host.field(), host.dim());
  const LadderAlgebra sub = LadderAlgebra::build(ladder, host.field());
  return embed(*sub.lie(), sub.traceless(), *host.lie());
}

}  // namespace

DerivedSeries derived_series(const LadderAlgebra& algebra) {
  DerivedSeries out;
  const MatrixLieAlgebra& g = *algebra.lie();
  out.terms.push_back(DerivedTerm{Subspace::full(g.field(), g.dim()), algebra.ladder(), false});
  out.terms[0].matches_traceless = out.terms[0].space == algebra.traceless();
  while (true) {
    Subspace next = derived_subspace(g, out.terms.back().space);
    if (next == out.terms.back().space) break;
    DerivedTerm term{next, std::nullopt, false};
    try {
      term.ladder = canonicalize(algebra.n(), support(algebra, next));
      term.matches_traceless = traceless_in(algebra, *term.ladder) == next;
    } catch (const NotALadderShape& e) {
      if (out.failure.empty()) out.failure = "term " + std::to_string(out.terms.size()) + ": " + e.what();
    }
    if (!term.matches_traceless) {
      out.recovered = false;
      if (out.failure.empty()) out.failure = "term " + std::to_string(out.terms.size()) + " is not a traceless ladder algebra";
    }
    out.terms.push_back(std::move(term));
  }
  out.core = sdut_core(algebra.ladder());
  out.terminal_is_core = traceless_in(algebra, out.core) == out.terms.back().space;
  return out;
}

Subspace normalizer_brute_force(const LadderAlgebra& algebra) { return normalizer_in_gl(*algebra.lie()); }

Subspace normalizer_closed_form(const LadderAlgebra& algebra) {
  return unit_span_in_gl(algebra.field(), algebra.n(), index_set(block_ladder(algebra.partition())));
}

Subspace centralizer_brute_force(const LadderAlgebra& algebra) { return centralizer_in_gl(*algebra.lie()); }

bool both_end_blocks_absent(const LadderAlgebra& algebra) {
  const int t = algebra.partition().t;
  return !contains(algebra.block_index_set(), {1, 1}) && !contains(algebra.block_index_set(), {t, t});
}

Subspace centralizer_closed_form(const LadderAlgebra& algebra) {
  const Field f = algebra.field();
  const int n = algebra.n();
  const auto sz = static_cast<std::size_t>(n);
  std::vector<Vec> rows{flatten(Mat::identity(f, sz))};
  if (both_end_blocks_absent(algebra)) {
    const BlockPartition& part = algebra.partition();
    const Subspace corner = unit_span_in_gl(f, n, part.entries_of_block({1, part.t}));
    for (std::size_t k = 0; k < corner.dim(); ++k) rows.push_back(corner.basis_vector(k));
  }
  return Subspace::span(f, sz * sz, rows);
}

nlohmann::ordered_json structure_report(const LadderAlgebra& algebra) {
  nlohmann::ordered_json j;
  j["ladder"] = algebra.ladder().to_string();
  j["field"] = algebra.field().to_string();
  j["dim"] = algebra.dim();
  if (algebra.empty()) {
    j["partition"] = nullptr;
    j["block_index_set"] = nlohmann::ordered_json::array();
  } else {
    j["partition"] = algebra.partition().sizes;
    auto blocks = nlohmann::ordered_json::array();
    for (const IndexPair b : algebra.block_index_set()) blocks.push_back({b.row, b.col});
    j["block_index_set"] = blocks;
  }
  j["class"] = to_json(classify(algebra.ladder()));
  j["normalizer_dim"] = normalizer_brute_force(algebra).dim();
  j["centralizer_dim"] = centralizer_brute_force(algebra).dim();
  if (algebra.lie()->bracket_closed()) {
    const DerivedSeries series = derived_series(algebra);
    auto dims = nlohmann::ordered_json::array();
    for (const auto& term : series.terms) dims.push_back(term.space.dim());
    j["derived_series_dims"] = dims;
    j["terminal_ladder"] = series.terms.size() > 1 && series.terms.back().ladder
                               ? series.terms.back().ladder->to_string()
                               : algebra.ladder().to_string();
    j["derived_series_recovered"] = series.recovered;
  }
  return j;
}

}  // namespace laddermat
