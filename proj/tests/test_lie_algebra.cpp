#include <random>

#include <gtest/gtest.h>

#include "laddermat/enumerate.hpp"
#include "laddermat/error.hpp"
#include "laddermat/ladder_algebra.hpp"
#include "laddermat/lie_algebra.hpp"

namespace {

using laddermat::Field;
using laddermat::IndexPair;
using laddermat::Ladder;
using laddermat::LadderAlgebra;
using laddermat::Mat;
using laddermat::Subspace;
using laddermat::Vec;

Vec random_coords(const Field& f, std::size_t d, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> val(-5, 5);
  Vec v;
  for (std::size_t k = 0; k < d; ++k) v.push_back(f.from_int(val(rng)));
  return v;
}

TEST(Bracket, Examples) {
  const Field q = Field::rationals();
  const LadderAlgebra m2 = LadderAlgebra::build(Ladder(2, {{2, 1}}), q);
  const auto h = laddermat::bracket(m2.unit({1, 2}), m2.unit({2, 1}));
  EXPECT_EQ(h.matrix(), Mat::from_ints(q, {{1, 0}, {0, -1}}));
  EXPECT_EQ(laddermat::bracket(m2.unit({1, 1}), m2.unit({1, 2})).matrix(), m2.unit({1, 2}).matrix());
  std::mt19937_64 rng(2);
  const auto a = m2.element(random_coords(q, 4, rng));
  EXPECT_TRUE(laddermat::is_zero(laddermat::bracket(a, a).coords));
}

TEST(Bracket, HostMismatch) {
  const Field q = Field::rationals();
  const LadderAlgebra a = LadderAlgebra::build(Ladder(2, {{2, 1}}), q);
  const LadderAlgebra b = LadderAlgebra::build(Ladder(2, {{1, 1}, {2, 2}}), q);
  EXPECT_THROW(laddermat::bracket(a.unit({1, 1}), b.unit({1, 1})), laddermat::AlgebraMismatch);
  // Separately built copies of the same algebra are interchangeable.
  const LadderAlgebra a2 = LadderAlgebra::build(Ladder(2, {{2, 1}}), q);
  EXPECT_NO_THROW(laddermat::bracket(a.unit({1, 1}), a2.unit({1, 2})));
}

TEST(MatrixLieAlgebra, CoordinatesRoundTrip) {
  const Field f = Field::prime(7);
  std::vector<Mat> basis{Mat::from_ints(f, {{1, 0}, {0, -1}}), Mat::from_ints(f, {{0, 1}, {0, 0}}),
                         Mat::from_ints(f, {{0, 0}, {1, 0}})};
  const laddermat::MatrixLieAlgebra sl2(f, 2, basis);
  EXPECT_TRUE(sl2.bracket_closed());
  const Vec c{f.from_int(3), f.from_int(1), f.from_int(5)};
  EXPECT_EQ(sl2.coordinates(sl2.matrix_of(c)), c);
  EXPECT_FALSE(sl2.coordinates(Mat::identity(f, 2)).has_value());
  EXPECT_THROW(laddermat::MatrixLieAlgebra(f, 2, {basis[0], basis[0]}), laddermat::DimensionMismatch);
  EXPECT_THROW(laddermat::MatrixLieAlgebra(f, 2, {basis[1], basis[2]}), laddermat::NotBracketClosed);
  EXPECT_FALSE(laddermat::MatrixLieAlgebra(f, 2, {basis[1], basis[2]}, false).bracket_closed());
}

TEST(DerivedSubspace, Examples) {
  const Field q = Field::rationals();
  const LadderAlgebra b2 = LadderAlgebra::build(Ladder(2, {{1, 1}, {2, 2}}), q);
  const Subspace d = laddermat::derived_subspace(*b2.lie(), Subspace::full(q, b2.dim()));
  EXPECT_EQ(d.dim(), 1u);
  EXPECT_TRUE(d.contains(b2.unit({1, 2}).coords));
  for (int n = 1; n <= 4; ++n) {
    const LadderAlgebra mn = LadderAlgebra::build(Ladder(n, {{n, 1}}), q);
    const Subspace dn = laddermat::derived_subspace(*mn.lie(), Subspace::full(q, mn.dim()));
    EXPECT_EQ(dn.dim(), static_cast<std::size_t>(n * n - 1));
    EXPECT_EQ(dn, mn.traceless());
  }
  const LadderAlgebra m3 = LadderAlgebra::build(Ladder(3, {{3, 1}}), q);
  const Subspace ab = Subspace::span(q, 9, std::vector<Vec>{m3.unit({1, 2}).coords, m3.unit({1, 3}).coords});
  EXPECT_EQ(laddermat::derived_subspace(*m3.lie(), ab).dim(), 0u);
}

// Jacobi on basis triples: exhaustive for n <= 4.
TEST(Jacobi, ExhaustiveBasisTriples) {
  const Field f = Field::prime(101);
  for (int n = 1; n <= 4; ++n) {
    for (const Ladder& l : laddermat::all_ladders(n)) {
      if (!laddermat::classify(l).upper_triangular) continue;
      const LadderAlgebra la = LadderAlgebra::build(l, f);
      const auto& g = *la.lie();
      const std::size_t d = g.dim();
      std::vector<Vec> e(d, laddermat::zero_vector(f, d));
      for (std::size_t k = 0; k < d; ++k) e[k][k] = f.one();
      for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = a + 1; b < d; ++b)
          for (std::size_t c = b + 1; c < d; ++c) {
            Vec sum = g.bracket(e[a], g.bracket(e[b], e[c]));
            laddermat::axpy(sum, f.one(), g.bracket(e[b], g.bracket(e[c], e[a])));
            laddermat::axpy(sum, f.one(), g.bracket(e[c], g.bracket(e[a], e[b])));
            ASSERT_TRUE(laddermat::is_zero(sum)) << l;
          }
    }
  }
}

TEST(Jacobi, RandomTriplesUpToSeven) {
  const Field f = Field::prime(101);
  std::mt19937_64 rng(31);
  for (int n = 5; n <= 7; ++n) {
    const auto ladders = laddermat::enumerate_dut(n);
    for (std::size_t i = 0; i < ladders.size(); i += 7) {
      if (ladders[i].empty()) continue;
      const LadderAlgebra la = LadderAlgebra::build(ladders[i], f);
      const auto& g = *la.lie();
      for (int trial = 0; trial < 5; ++trial) {
        const Vec x = random_coords(f, g.dim(), rng), y = random_coords(f, g.dim(), rng),
                  z = random_coords(f, g.dim(), rng);
        Vec sum = g.bracket(x, g.bracket(y, z));
        laddermat::axpy(sum, f.one(), g.bracket(y, g.bracket(z, x)));
        laddermat::axpy(sum, f.one(), g.bracket(z, g.bracket(x, y)));
        EXPECT_TRUE(laddermat::is_zero(sum)) << ladders[i];
        // Coordinate bracket agrees with the matrix commutator.
        EXPECT_EQ(g.matrix_of(g.bracket(x, y)), laddermat::commutator(g.matrix_of(x), g.matrix_of(y)));
      }
    }
  }
}

TEST(Closure, UpperTriangularLaddersExhaustive) {
  const Field f = Field::prime(101);
  for (int n = 1; n <= 5; ++n) {
    for (const Ladder& l : laddermat::all_ladders(n)) {
      const LadderAlgebra la = LadderAlgebra::build(l, f, true);
      const bool ut = laddermat::classify(l).upper_triangular;
      EXPECT_EQ(la.lie()->bracket_closed(), ut) << l;
      if (!ut) EXPECT_THROW(LadderAlgebra::build(l, f), laddermat::NotBracketClosed) << l;
    }
  }
}

}  // namespace
