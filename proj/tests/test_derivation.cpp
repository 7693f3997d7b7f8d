#include <random>

#include <gtest/gtest.h>

#include "laddermat/derivation.hpp"
#include "laddermat/enumerate.hpp"
#include "laddermat/error.hpp"
#include "laddermat/verify.hpp"

namespace {

using laddermat::CaseTag;
using laddermat::Endomap;
using laddermat::Field;
using laddermat::FieldScalar;
using laddermat::Ladder;
using laddermat::LadderAlgebra;
using laddermat::Mat;
using laddermat::Subspace;
using laddermat::Vec;

const Field kF = Field::prime(101);

Mat unit(const Field& f, int n, int i, int j) {
  return Mat::unit(f, static_cast<std::size_t>(n), static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1));
}

std::vector<Endomap> basis_maps(const LadderAlgebra& la, const Subspace& s) {
  std::vector<Endomap> out;
  for (std::size_t k = 0; k < s.dim(); ++k) out.push_back(Endomap::from_flat(la.lie(), s.basis().row(k)));
  return out;
}

std::vector<Ladder> dut_nonempty(int n) {
  std::vector<Ladder> out;
  for (const Ladder& l : laddermat::enumerate_dut(n))
    if (!l.empty()) out.push_back(l);
  return out;
}

TEST(IsDerivation, Examples) {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<std::int64_t> val(-9, 9);
  const LadderAlgebra la = LadderAlgebra::build(Ladder(4, {{3, 2}}), kF);
  Mat x(kF, 4, 4);
  for (const auto p : laddermat::index_set(laddermat::block_ladder(la.partition())))
    x(static_cast<std::size_t>(p.row - 1), static_cast<std::size_t>(p.col - 1)) = kF.from_int(val(rng));
  EXPECT_TRUE(laddermat::is_derivation(laddermat::adjoint(la.lie(), x)));

  EXPECT_TRUE(laddermat::is_derivation(laddermat::char2_counterexample()));

  const Field q = Field::rationals();
  const LadderAlgebra m2 = LadderAlgebra::build(Ladder(2, {{2, 1}}), q);
  std::vector<Mat> images;
  for (const Mat& b : m2.lie()->basis()) images.push_back(b.transpose());
  EXPECT_FALSE(laddermat::is_derivation(Endomap::from_matrix_images(m2.lie(), images)));
  EXPECT_TRUE(laddermat::is_derivation(Endomap::zero(m2.lie())));
}

TEST(DerivationSpace, Examples) {
  const Field q = Field::rationals();
  EXPECT_EQ(laddermat::derivation_space(*LadderAlgebra::build(Ladder(2, {{2, 1}}), q).lie()).dim(), 4u);
  EXPECT_EQ(laddermat::derivation_space(*LadderAlgebra::build(Ladder(4, {{3, 2}}), kF).lie()).dim(), 10u);
  // span{E12, E13} is abelian: every endomorphism is a derivation.
  const LadderAlgebra ab = LadderAlgebra::build(Ladder(3, {{1, 2}}), kF);
  ASSERT_EQ(ab.dim(), 2u);
  EXPECT_EQ(laddermat::derivation_space(*ab.lie()).dim(), 4u);
  EXPECT_EQ(laddermat::derivation_space(*LadderAlgebra::build(Ladder(7, {{1, 1}, {4, 3}, {5, 5}}), kF).lie()).dim(),
            29u);
}

TEST(DerivationSpace, BasisVectorsAreDerivations) {
  for (const Ladder& l : dut_nonempty(3)) {
    const LadderAlgebra la = LadderAlgebra::build(l, Field::prime(5));
    for (const Endomap& f : basis_maps(la, laddermat::derivation_space(*la.lie())))
      EXPECT_TRUE(laddermat::is_derivation(f)) << l;
  }
}

TEST(DerivationSpace, IsLieSubalgebraWithIdealDee) {
  for (int n = 1; n <= 4; ++n)
    for (const Ladder& l : dut_nonempty(n)) {
      const LadderAlgebra la = LadderAlgebra::build(l, kF);
      const Subspace der = laddermat::derivation_space(*la.lie());
      const Subspace inner = laddermat::inner_space(la);
      const Subspace dee = laddermat::dee_space(la);
      const auto ders = basis_maps(la, der);
      const auto inners = basis_maps(la, inner);
      const auto dees = basis_maps(la, dee);
      for (std::size_t a = 0; a < ders.size(); ++a) {
        for (std::size_t b = a + 1; b < ders.size(); ++b)
          EXPECT_TRUE(der.contains(laddermat::commutator(ders[a], ders[b]).flat())) << l;
        for (const Endomap& d : dees) EXPECT_TRUE(dee.contains(laddermat::commutator(ders[a], d).flat())) << l;
      }
      for (std::size_t a = 0; a < inners.size(); ++a)
        for (std::size_t b = a + 1; b < inners.size(); ++b)
          EXPECT_TRUE(inner.contains(laddermat::commutator(inners[a], inners[b]).flat())) << l;
    }
}

// ad(N) is a subalgebra but not an ideal: [d, ad E33] = d for d(A) = a22 E13.
TEST(DerivationSpace, InnerSpaceIsNotAlwaysAnIdeal) {
  const LadderAlgebra la = LadderAlgebra::build(Ladder(3, {{2, 2}}), kF);
  const Subspace inner = laddermat::inner_space(la);
  const auto dees = laddermat::dee_basis(la);
  ASSERT_EQ(dees.size(), 1u);
  const Endomap& d = dees[0];
  const Endomap ad = laddermat::adjoint(la.lie(), Mat::unit(kF, 3, 2, 2));
  ASSERT_TRUE(inner.contains(ad.flat()));
  const Endomap c = laddermat::commutator(d, ad);
  EXPECT_EQ(c.matrix(), d.matrix());
  EXPECT_FALSE(c.matrix().is_zero());
  EXPECT_FALSE(inner.contains(c.flat()));
}

TEST(InnerSpace, Examples) {
  EXPECT_EQ(laddermat::inner_space(LadderAlgebra::build(Ladder(3, {{3, 1}}), kF)).dim(), 8u);
  EXPECT_EQ(laddermat::inner_space(LadderAlgebra::build(Ladder(4, {{3, 2}}), kF)).dim(), 9u);
  EXPECT_EQ(laddermat::inner_space(LadderAlgebra::build(Ladder(7, {{1, 1}, {4, 3}, {5, 5}}), kF)).dim(), 29u);
  EXPECT_THROW(laddermat::inner_space(LadderAlgebra::build(Ladder(3, {{1, 2}}), kF)), laddermat::HypothesisViolated);
}

TEST(DeeSpace, Examples) {
  EXPECT_EQ(laddermat::dee_space(LadderAlgebra::build(Ladder(4, {{1, 1}, {3, 2}}), kF)).dim(), 0u);
  EXPECT_EQ(laddermat::dee_space(LadderAlgebra::build(Ladder(7, {{1, 1}, {4, 3}, {5, 5}}), kF)).dim(), 0u);
  const Ladder bt = laddermat::block_ladder(laddermat::BlockPartition::from_sizes({1, 2, 1}));
  EXPECT_EQ(laddermat::dee_space(LadderAlgebra::build(bt, kF)).dim(), 3u);
  EXPECT_EQ(laddermat::dee_space(LadderAlgebra::build(Ladder(4, {{3, 2}}), kF)).dim(), 1u);
  // Every D element kills the derived algebra and lands in the centralizer.
  const LadderAlgebra la = LadderAlgebra::build(Ladder(5, {{3, 2}}), kF);
  const Subspace derived = laddermat::derived_subspace(*la.lie(), Subspace::full(kF, la.dim()));
  const Subspace z = laddermat::centralizer_in_algebra(la);
  for (const Endomap& d : laddermat::dee_basis(la)) {
    for (std::size_t k = 0; k < derived.dim(); ++k) EXPECT_TRUE(laddermat::is_zero(d.apply(derived.basis_vector(k))));
    for (std::size_t c = 0; c < la.dim(); ++c)
      EXPECT_TRUE(z.contains(laddermat::flatten(la.lie()->matrix_of(d.image(c)))));
  }
}

TEST(PredictedDim, Examples) {
  const auto m2 = laddermat::predicted_der_dim(LadderAlgebra::build(Ladder(2, {{2, 1}}), kF));
  EXPECT_EQ(m2.dim, 4u);
  EXPECT_EQ(m2.case_tag, CaseTag::block_ut);
  const auto ex = laddermat::predicted_der_dim(LadderAlgebra::build(Ladder(7, {{1, 1}, {4, 3}, {5, 5}}), kF));
  EXPECT_EQ(ex.dim, 29u);
  EXPECT_EQ(ex.case_tag, CaseTag::end_block_present);
  const auto l32 = laddermat::predicted_der_dim(LadderAlgebra::build(Ladder(4, {{3, 2}}), kF));
  EXPECT_EQ(l32.dim, 10u);
  EXPECT_EQ(l32.case_tag, CaseTag::both_ends_absent);
  EXPECT_THROW(laddermat::predicted_der_dim(LadderAlgebra::build(Ladder(2, {{2, 1}}), Field::prime(2))),
               laddermat::HypothesisViolated);
  EXPECT_THROW(laddermat::predicted_der_dim(LadderAlgebra::build(Ladder(5, {{1, 2}, {3, 4}}), kF)),
               laddermat::HypothesisViolated);
}

TEST(Decompose, AdjointOfE11) {
  const Field q = Field::rationals();
  const LadderAlgebra m2 = LadderAlgebra::build(Ladder(2, {{2, 1}}), q);
  const Endomap f = laddermat::adjoint(m2.lie(), unit(q, 2, 1, 1));
  const auto dec = laddermat::decompose(f, m2);
  EXPECT_EQ(dec.case_tag, CaseTag::block_ut);
  // X is E11 modulo F I: the reduced representative differs from E11 by a scalar matrix.
  const Mat diff = dec.x_rep - unit(q, 2, 1, 1);
  EXPECT_EQ(diff, Mat::identity(q, 2) * diff(0, 0));
  ASSERT_EQ(dec.c.size(), 1u);
  EXPECT_TRUE(dec.c[0].second.is_zero());
  EXPECT_EQ(laddermat::recompose(dec, m2), f);
}

TEST(Decompose, Char2CounterexampleFails) {
  const LadderAlgebra m2 = LadderAlgebra::build(Ladder(2, {{2, 1}}), Field::prime(2));
  EXPECT_THROW(laddermat::decompose(laddermat::char2_counterexample(), m2), laddermat::NotInDecomposition);
}

TEST(Decompose, PureDeeMapRoundTrips) {
  const LadderAlgebra la = LadderAlgebra::build(Ladder(4, {{3, 2}}), kF);
  const FieldScalar y = kF.from_int(7);
  // f(A) = tr(A_22) * y E14.
  std::vector<Vec> images;
  for (std::size_t c = 0; c < la.dim(); ++c) {
    Vec v = laddermat::zero_vector(kF, la.dim());
    const auto p = la.basis()[c];
    if (p.row == p.col && p.row >= 2 && p.row <= 3) v[*la.index_of({1, 4})] = y;
    images.push_back(std::move(v));
  }
  const Endomap f = Endomap::from_images(la.lie(), images);
  ASSERT_TRUE(laddermat::is_derivation(f));
  const auto dec = laddermat::decompose(f, la);
  EXPECT_EQ(dec.case_tag, CaseTag::both_ends_absent);
  EXPECT_TRUE(dec.x_rep.is_zero());
  ASSERT_EQ(dec.y.size(), 1u);
  EXPECT_EQ(dec.y[0].k, 2);
  EXPECT_EQ(dec.y[0].y, Mat::from_entries(kF, 1, 1, {y}));
  EXPECT_EQ(laddermat::recompose(dec, la), f);
}

TEST(Decompose, EveryBasisDerivationUpToFour) {
  for (const Field f : {kF, Field::prime(3)}) {
    for (int n = 1; n <= 4; ++n)
      for (const Ladder& l : dut_nonempty(n)) {
        const LadderAlgebra la = LadderAlgebra::build(l, f);
        const laddermat::Decomposer decompose(la);
        for (const Endomap& d : basis_maps(la, laddermat::derivation_space(*la.lie()))) {
          const auto dec = decompose(d);
          EXPECT_EQ(laddermat::recompose(dec, la), d) << l;
          EXPECT_EQ(dec.case_tag, laddermat::case_of(la));
          EXPECT_TRUE(laddermat::dee_space(la).contains(dec.d_part.flat()));
        }
      }
  }
}

TEST(Decompose, RejectsNonDut) {
  const LadderAlgebra la = LadderAlgebra::build(Ladder(5, {{1, 2}, {3, 4}}), kF);
  EXPECT_THROW(laddermat::decompose(Endomap::zero(la.lie()), la), laddermat::HypothesisViolated);
}

TEST(Dominance, Examples) {
  const LadderAlgebra la = LadderAlgebra::build(Ladder(4, {{3, 2}}), kF);
  for (const Endomap& d : basis_maps(la, laddermat::derivation_space(*la.lie())))
    EXPECT_TRUE(laddermat::check_dominance(d, la));
  EXPECT_TRUE(laddermat::check_dominance(Endomap::zero(la.lie()), la));

  const LadderAlgebra bad = LadderAlgebra::build(Ladder(5, {{1, 2}, {3, 4}}), kF);
  const Endomap f = laddermat::dominance_counterexample(kF, 1, 1);
  EXPECT_TRUE(laddermat::is_derivation(f));
  EXPECT_FALSE(laddermat::check_dominance(f, bad));
}

TEST(RestrictToCore, AdjointAndDee) {
  const LadderAlgebra la = LadderAlgebra::build(Ladder(4, {{1, 1}, {3, 2}}), kF);
  const Mat x = unit(kF, 4, 2, 3) + unit(kF, 4, 1, 4) * kF.from_int(3);
  const Endomap r = laddermat::restrict_to_core(laddermat::adjoint(la.lie(), x), la);
  EXPECT_EQ(r, laddermat::adjoint(r.host(), x));

  const LadderAlgebra l32 = LadderAlgebra::build(Ladder(4, {{3, 2}}), kF);
  for (const Endomap& d : laddermat::dee_basis(l32)) {
    const Endomap rd = laddermat::restrict_to_core(d, l32);
    EXPECT_TRUE(rd.matrix().is_zero());
  }
  // Every derivation stabilizes the core.
  for (const Endomap& d : basis_maps(l32, laddermat::derivation_space(*l32.lie())))
    EXPECT_TRUE(laddermat::is_derivation(laddermat::restrict_to_core(d, l32)));
}

TEST(RestrictToCore, NonStableMapRejected) {
  const LadderAlgebra la = LadderAlgebra::build(Ladder(2, {{2, 1}}), kF);
  // E12 -> E11 leaves sl_2.
  std::vector<Vec> images(la.dim(), laddermat::zero_vector(kF, la.dim()));
  images[*la.index_of({1, 2})][*la.index_of({1, 1})] = kF.one();
  EXPECT_THROW(laddermat::restrict_to_core(Endomap::from_images(la.lie(), images), la), laddermat::StabilityViolation);
}

TEST(ExtendFromCore, Examples) {
  const Field f5 = Field::prime(5);
  const LadderAlgebra m2 = LadderAlgebra::build(Ladder(2, {{2, 1}}), f5);
  const Endomap f = laddermat::adjoint(m2.traceless_algebra(), unit(f5, 2, 1, 2));
  const auto e = laddermat::extend_from_core(f, m2);
  const Mat diff = e.x - unit(f5, 2, 1, 2);
  EXPECT_EQ(diff, Mat::identity(f5, 2) * diff(0, 0));
  EXPECT_EQ(laddermat::restrict_to_core(e.f_plus, m2), f);

  const LadderAlgebra c3 = LadderAlgebra::build(Ladder(4, {{2, 1}}), Field::prime(3));
  const Endomap g3 = laddermat::char3_core_counterexample();
  EXPECT_TRUE(laddermat::is_derivation(g3));
  EXPECT_THROW(laddermat::extend_from_core(g3, c3), laddermat::NoAdjointWitness);

  const LadderAlgebra c2 = LadderAlgebra::build(Ladder(2, {{2, 1}}), Field::prime(2));
  const Endomap g2 = laddermat::char2_core_counterexample();
  EXPECT_TRUE(laddermat::is_derivation(g2));
  EXPECT_THROW(laddermat::extend_from_core(g2, c2), laddermat::NoAdjointWitness);
}

TEST(ExtendFromCore, Char3MapComesFromTheStatedBasis) {
  const Endomap g = laddermat::char3_core_counterexample();
  const Field f3 = Field::prime(3);
  const auto& basis = g.host()->basis();
  for (std::size_t c = 0; c < basis.size(); ++c) {
    const Mat image = g.host()->matrix_of(g.image(c));
    EXPECT_EQ(image, basis[c] == unit(f3, 4, 1, 2) ? unit(f3, 4, 2, 4) : Mat(f3, 4, 4));
  }
}

TEST(OneCorner, AllOneCornerLaddersUpToFive) {
  for (int n = 1; n <= 5; ++n)
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        const Ladder l(n, {{i, j}});
        const LadderAlgebra la = LadderAlgebra::build(l, kF);
        const std::size_t der = laddermat::derivation_space(*la.lie()).dim();
        if (i < j) {
          EXPECT_EQ(der, la.dim() * la.dim()) << l;
          continue;
        }
        const std::size_t nc =
            laddermat::normalizer_brute_force(la).dim() - laddermat::centralizer_brute_force(la).dim();
        const auto predicted = laddermat::predicted_der_dim(la);
        if (i == n && j == 1) {
          // M_n carries the non-inner derivation A -> tr(A) I_n.
          EXPECT_EQ(der, nc + 1) << l;
          EXPECT_EQ(laddermat::dee_space(la).dim(), 1u) << l;
        } else if (j == 1 || i == n) {
          EXPECT_EQ(der, nc) << l;
          EXPECT_EQ(laddermat::dee_space(la).dim(), 0u) << l;
        } else {
          EXPECT_EQ(predicted.case_tag, CaseTag::both_ends_absent) << l;
        }
        EXPECT_EQ(der, predicted.dim) << l;
      }
}

TEST(Intertwiner, DimensionOneWithIdentityGenerator) {
  for (const Field f : {Field::prime(7), Field::rationals()})
    for (int m = 1; m <= 4; ++m)
      for (int n = 1; n <= 4; ++n) {
        const Subspace s = laddermat::solve_intertwiner(m, n, f);
        ASSERT_EQ(s.dim(), 1u);
        Vec expected = laddermat::zero_vector(f, static_cast<std::size_t>(m * m + n * n));
        for (int k = 0; k < m; ++k) expected[static_cast<std::size_t>(k * m + k)] = f.one();
        for (int k = 0; k < n; ++k) expected[static_cast<std::size_t>(m * m + k * n + k)] = f.one();
        EXPECT_EQ(s.basis_vector(0), expected);
      }
  EXPECT_THROW(laddermat::solve_intertwiner(0, 2, Field::prime(7)), laddermat::DimensionMismatch);
}

}  // namespace
