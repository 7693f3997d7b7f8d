#ifndef LADDERMAT_FIELD_HPP
#define LADDERMAT_FIELD_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace laddermat {

class FieldScalar;

/// Runtime field selector: the rationals or a prime field GF(p).
///
/// A `Field` is a tag, not a container; it is cheap to copy and compare.
/// Prime moduli are limited to p < 2^31 so residue products fit in 64 bits.
class Field {
 public:
  /// The rationals.
  constexpr Field() = default;

  static Field rationals() { return Field{}; }
  /// GF(p). Throws InvalidField unless p is a prime below 2^31.
  static Field prime(std::uint32_t p);
  /// Parses the CLI selector syntax: `q` or `gf:<p>`.
  static Field parse(std::string_view spec);

  bool is_rational() const { return modulus_ == 0; }
  /// 0 for the rationals, p for GF(p).
  std::uint32_t characteristic() const { return modulus_; }

  FieldScalar zero() const;
  FieldScalar one() const;
  FieldScalar from_int(std::int64_t value) const;
  /// num/den, reduced into the field. Throws DivisionByZero when den maps to 0.
  FieldScalar from_fraction(std::int64_t num, std::int64_t den) const;

  /// Inverse of `parse`.
  std::string to_string() const;

  friend bool operator==(const Field&, const Field&) = default;
  friend auto operator<=>(const Field&, const Field&) = default;

 private:
  explicit constexpr Field(std::uint32_t modulus) : modulus_(modulus) {}

  std::uint32_t modulus_ = 0;
};

std::uint32_t characteristic(const Field& field);

/// An exact field element tagged with its field.
///
/// Rationals are kept in lowest terms with positive denominator (GMP
/// canonical form); residues are kept in [0, p). Mixing two different
/// fields in one operation throws FieldMismatch.
class FieldScalar {
 public:
  /// Rational zero.
  FieldScalar() = default;

  const Field& field() const { return field_; }

  bool is_zero() const;
  bool is_one() const;

  /// Residue in [0, p). Only meaningful for prime fields.
  std::uint32_t residue() const;
  /// Rational value. Only meaningful for the rationals.
  const mpq_class& rational() const;

  FieldScalar operator-() const;
  FieldScalar& operator+=(const FieldScalar& rhs);
  FieldScalar& operator-=(const FieldScalar& rhs);
  FieldScalar& operator*=(const FieldScalar& rhs);
  FieldScalar& operator/=(const FieldScalar& rhs);

  friend FieldScalar operator+(FieldScalar lhs, const FieldScalar& rhs) { return lhs += rhs; }
  friend FieldScalar operator-(FieldScalar lhs, const FieldScalar& rhs) { return lhs -= rhs; }
  friend FieldScalar operator*(FieldScalar lhs, const FieldScalar& rhs) { return lhs *= rhs; }
  friend FieldScalar operator/(FieldScalar lhs, const FieldScalar& rhs) { return lhs /= rhs; }

  /// Multiplicative inverse; throws DivisionByZero on zero.
  FieldScalar inverse() const;

  /// Values in different fields compare unequal.
  friend bool operator==(const FieldScalar& a, const FieldScalar& b);

  std::string to_string() const;

 private:
  friend class Field;

  FieldScalar(Field field, std::uint32_t residue) : field_(field), value_(residue) {}
  FieldScalar(mpq_class value) : value_(std::move(value)) {}

  void require_same_field(const FieldScalar& other) const;

  Field field_;
  std::variant<std::uint32_t, mpq_class> value_{mpq_class(0)};
};

FieldScalar add(const FieldScalar& a, const FieldScalar& b);
FieldScalar sub(const FieldScalar& a, const FieldScalar& b);
FieldScalar mul(const FieldScalar& a, const FieldScalar& b);
FieldScalar inv(const FieldScalar& a);

std::ostream& operator<<(std::ostream& os, const FieldScalar& x);
std::ostream& operator<<(std::ostream& os, const Field& f);

}  // namespace laddermat

#endif  // LADDERMAT_FIELD_HPP
