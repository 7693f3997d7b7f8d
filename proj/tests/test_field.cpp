#include <random>

#include <gtest/gtest.h>

#include "laddermat/error.hpp"
#include "laddermat/field.hpp"

namespace {

using laddermat::Field;
using laddermat::FieldScalar;

TEST(Field, PrimeArithmetic) {
  const Field f7 = Field::prime(7);
  EXPECT_EQ(f7.from_int(5) + f7.from_int(4), f7.from_int(2));
  EXPECT_EQ((f7.from_int(5) + f7.from_int(4)).residue(), 2u);
  const Field f2 = Field::prime(2);
  EXPECT_TRUE((f2.one() + f2.one()).is_zero());
  EXPECT_EQ(f7.from_int(-1).residue(), 6u);
}

TEST(Field, RationalArithmetic) {
  const Field q = Field::rationals();
  EXPECT_EQ(q.from_fraction(1, 2) + q.from_fraction(1, 3), q.from_fraction(5, 6));
  const FieldScalar x = q.from_fraction(-4, -6);
  EXPECT_EQ(x.rational().get_num(), 2);
  EXPECT_EQ(x.rational().get_den(), 3);
  EXPECT_EQ(q.from_fraction(3, -4).to_string(), "-3/4");
}

TEST(Field, Inverse) {
  EXPECT_EQ(Field::prime(7).from_int(3).inverse(), Field::prime(7).from_int(5));
  EXPECT_EQ(Field::rationals().from_fraction(2, 3).inverse(), Field::rationals().from_fraction(3, 2));
  EXPECT_EQ(Field::prime(5).from_int(4).inverse(), Field::prime(5).from_int(4));
  EXPECT_THROW(Field::prime(5).zero().inverse(), laddermat::DivisionByZero);
  EXPECT_THROW(Field::rationals().zero().inverse(), laddermat::DivisionByZero);
}

TEST(Field, InverseIsTwoSidedExhaustive) {
  for (const std::uint32_t p : {2u, 3u, 5u, 7u, 101u}) {
    const Field f = Field::prime(p);
    for (std::uint32_t a = 1; a < p; ++a) {
      const FieldScalar x = f.from_int(a);
      EXPECT_TRUE((x * x.inverse()).is_one()) << p << ' ' << a;
      EXPECT_TRUE((x.inverse() * x).is_one()) << p << ' ' << a;
    }
  }
}

TEST(Field, Characteristic) {
  EXPECT_EQ(characteristic(Field::rationals()), 0u);
  EXPECT_EQ(characteristic(Field::prime(2)), 2u);
  EXPECT_EQ(characteristic(Field::prime(101)), 101u);
}

TEST(Field, Parse) {
  EXPECT_EQ(Field::parse("q"), Field::rationals());
  EXPECT_EQ(Field::parse("gf:101"), Field::prime(101));
  EXPECT_THROW(Field::parse("gf:4"), laddermat::InvalidField);
  EXPECT_THROW(Field::parse("gf:1"), laddermat::InvalidField);
  EXPECT_THROW(Field::parse("r"), laddermat::InvalidField);
  EXPECT_THROW(Field::parse("gf:"), laddermat::InvalidField);
}

TEST(Field, MixedFieldsRejected) {
  EXPECT_THROW(Field::prime(5).one() + Field::prime(7).one(), laddermat::FieldMismatch);
  EXPECT_THROW(Field::rationals().one() * Field::prime(7).one(), laddermat::FieldMismatch);
  EXPECT_FALSE(Field::prime(5).one() == Field::prime(7).one());
}

class FieldAxioms : public ::testing::TestWithParam<Field> {};

TEST_P(FieldAxioms, RandomTriples) {
  const Field f = GetParam();
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<std::int64_t> num(-50, 50);
  std::uniform_int_distribution<std::int64_t> den(1, 20);
  auto draw = [&] { return f.is_rational() ? f.from_fraction(num(rng), den(rng)) : f.from_int(num(rng)); };
  for (int trial = 0; trial < 300; ++trial) {
    const FieldScalar a = draw(), b = draw(), c = draw();
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a - a, f.zero());
    if (!b.is_zero()) {
      EXPECT_EQ((a / b) * b, a);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(AllFields, FieldAxioms,
                         ::testing::Values(Field::rationals(), Field::prime(2), Field::prime(3), Field::prime(5),
                                           Field::prime(7), Field::prime(101)),
                         [](const auto& info) {
                           return info.param.is_rational() ? std::string("Q")
                                                           : "GF" + std::to_string(info.param.characteristic());
                         });

}  // namespace
