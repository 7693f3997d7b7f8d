#include "laddermat/field.hpp"

#include <charconv>
#include <ostream>
#include <utility>

#include "laddermat/error.hpp"

namespace laddermat {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::uint32_t reduce(std::int64_t value, std::uint32_t p) {
  std::int64_t r = value % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

// Extended Euclid over the residues; p is prime and a != 0.
std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  return reduce(t, p);
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p)) {
    throw InvalidField("modulus " + std::to_string(p) + " is not a supported prime");
  }
  return Field(p);
}

Field Field::parse(std::string_view spec) {
  if (spec == "q" || spec == "Q") return rationals();
  constexpr std::string_view prefix = "gf:";
  if (spec.substr(0, prefix.size()) == prefix) {
    std::string_view digits = spec.substr(prefix.size());
    std::uint32_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec == std::errc{} && ptr == digits.data() + digits.size() && !digits.empty()) {
      return prime(p);
    }
  }
  throw InvalidField("cannot parse field selector '" + std::string(spec) + "' (expected q or gf:<p>)");
}

FieldScalar Field::zero() const { return from_int(0); }
FieldScalar Field::one() const { return from_int(1); }

FieldScalar Field::from_int(std::int64_t value) const {
  if (is_rational()) return FieldScalar(mpq_class(static_cast<long>(value)));
  return FieldScalar(*this, reduce(value, modulus_));
}

FieldScalar Field::from_fraction(std::int64_t num, std::int64_t den) const {
  return from_int(num) / from_int(den);
}

std::string Field::to_string() const {
  return is_rational() ? std::string("q") : "gf:" + std::to_string(modulus_);
}

std::uint32_t characteristic(const Field& field) { return field.characteristic(); }

bool FieldScalar::is_zero() const {
  if (const auto* r = std::get_if<std::uint32_t>(&value_)) return *r == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool FieldScalar::is_one() const {
  if (const auto* r = std::get_if<std::uint32_t>(&value_)) return *r == 1;
  return std::get<mpq_class>(value_) == 1;
}

std::uint32_t FieldScalar::residue() const { return std::get<std::uint32_t>(value_); }
const mpq_class& FieldScalar::rational() const { return std::get<mpq_class>(value_); }

void FieldScalar::require_same_field(const FieldScalar& other) const {
  if (field_ != other.field_) {
    throw FieldMismatch(field_.to_string() + " vs " + other.field_.to_string());
  }
}

FieldScalar FieldScalar::operator-() const {
  if (field_.is_rational()) return FieldScalar(mpq_class(-rational()));
  const std::uint32_t r = residue();
  return FieldScalar(field_, r == 0 ? 0 : field_.characteristic() - r);
}

FieldScalar& FieldScalar::operator+=(const FieldScalar& rhs) {
  require_same_field(rhs);
  if (field_.is_rational()) {
    std::get<mpq_class>(value_) += rhs.rational();
  } else {
    const std::uint64_t p = field_.characteristic();
    auto& r = std::get<std::uint32_t>(value_);
    r = static_cast<std::uint32_t>((std::uint64_t{r} + rhs.residue()) % p);
  }
  return *this;
}

FieldScalar& FieldScalar::operator-=(const FieldScalar& rhs) {
  require_same_field(rhs);
  if (field_.is_rational()) {
    std::get<mpq_class>(value_) -= rhs.rational();
  } else {
    const std::uint64_t p = field_.characteristic();
    auto& r = std::get<std::uint32_t>(value_);
    r = static_cast<std::uint32_t>((std::uint64_t{r} + p - rhs.residue()) % p);
  }
  return *this;
}

FieldScalar& FieldScalar::operator*=(const FieldScalar& rhs) {
  require_same_field(rhs);
  if (field_.is_rational()) {
    std::get<mpq_class>(value_) *= rhs.rational();
  } else {
    const std::uint64_t p = field_.characteristic();
    auto& r = std::get<std::uint32_t>(value_);
    r = static_cast<std::uint32_t>((std::uint64_t{r} * rhs.residue()) % p);
  }
  return *this;
}

FieldScalar& FieldScalar::operator/=(const FieldScalar& rhs) {
  return *this *= rhs.inverse();
}

FieldScalar FieldScalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in " + field_.to_string());
  if (field_.is_rational()) return FieldScalar(mpq_class(1 / rational()));
  return FieldScalar(field_, inverse_mod(residue(), field_.characteristic()));
}

bool operator==(const FieldScalar& a, const FieldScalar& b) {
  return a.field_ == b.field_ && a.value_ == b.value_;
}

std::string FieldScalar::to_string() const {
  if (field_.is_rational()) return rational().get_str();
  return std::to_string(residue());
}

FieldScalar add(const FieldScalar& a, const FieldScalar& b) { return a + b; }
FieldScalar sub(const FieldScalar& a, const FieldScalar& b) { return a - b; }
FieldScalar mul(const FieldScalar& a, const FieldScalar& b) { return a * b; }
FieldScalar inv(const FieldScalar& a) { return a.inverse(); }

std::ostream& operator<<(std::ostream& os, const FieldScalar& x) { return os << x.to_string(); }
std::ostream& operator<<(std::ostream& os, const Field& f) { return os << f.to_string(); }

}  // namespace laddermat
