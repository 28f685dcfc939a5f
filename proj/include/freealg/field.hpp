#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace freealg {

/// Ground field selector: the rationals or a prime field F_p.
class Field {
 public:
  static Field rational() { return Field{0}; }
  /// Throws BadPrime unless p is a prime >= 2 (checked by trial division).
  static Field prime(std::uint64_t p);
  /// Parses "q" or "fp:<prime>".
  static Field parse(std::string_view selector);

  bool is_rational() const noexcept { return p_ == 0; }
  std::uint64_t characteristic() const noexcept { return p_; }
  std::string selector() const;

  friend bool operator==(Field, Field) = default;

 private:
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_;
};

/// An exact scalar tagged with its field. Rationals are kept in lowest terms
/// with positive denominator, F_p values as representatives in [0, p).
class FieldElem {
 public:
  FieldElem() : field_(Field::rational()), value_(mpq_class(0)) {}
  FieldElem(Field field, long value);
  /// Reduces num/den into the field; throws DivisionByZero if den vanishes there.
  static FieldElem from_rational(Field field, const mpq_class& q);
  static FieldElem zero(Field f) { return FieldElem(f, 0); }
  static FieldElem one(Field f) { return FieldElem(f, 1); }

  Field field() const noexcept { return field_; }
  bool is_zero() const;
  bool is_one() const;

  /// Rational value; valid only over Q.
  const mpq_class& rational() const { return std::get<mpq_class>(value_); }
  /// Canonical residue; valid only over F_p.
  std::uint64_t residue() const { return std::get<std::uint64_t>(value_); }

  FieldElem operator-() const;
  FieldElem inv() const;
  FieldElem pow(std::uint64_t e) const;

  FieldElem& operator+=(const FieldElem& b);
  FieldElem& operator-=(const FieldElem& b);
  FieldElem& operator*=(const FieldElem& b);
  FieldElem& operator/=(const FieldElem& b) { return *this *= b.inv(); }

  friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
  friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
  friend FieldElem operator*(FieldElem a, const FieldElem& b) { return a *= b; }
  friend FieldElem operator/(FieldElem a, const FieldElem& b) { return a /= b; }
  friend bool operator==(const FieldElem& a, const FieldElem& b);

  /// "3", "-1/2"; F_p values print as their representative.
  std::string to_string() const;
  /// True when to_string() would start with '-'.
  bool is_negative_rational() const;

 private:
  FieldElem(Field f, std::variant<std::uint64_t, mpq_class> v) : field_(f), value_(std::move(v)) {}
  void require_same_field(const FieldElem& b) const;

  Field field_;
  std::variant<std::uint64_t, mpq_class> value_;
};

}  // namespace freealg
