#include "freealg/field.hpp"

#include <charconv>

#include "freealg/error.hpp"

namespace freealg {

namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d <= p / d; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t reduce(const mpz_class& z, std::uint64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
  return r.get_ui();
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (!is_prime(p))
    throw Error(ErrorCode::BadPrime, "field modulus is not prime", {{"p", std::to_string(p)}});
  return Field{p};
}

Field Field::parse(std::string_view s) {
  if (s == "q" || s == "Q") return rational();
  if (s.starts_with("fp:")) {
    auto digits = s.substr(3);
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec == std::errc{} && ptr == digits.data() + digits.size() && !digits.empty())
      return prime(p);
  }
  throw Error(ErrorCode::BadFieldSelector, "field selector must be \"q\" or \"fp:<prime>\"",
              {{"selector", std::string(s)}});
}

std::string Field::selector() const {
  return is_rational() ? "q" : "fp:" + std::to_string(p_);
}

FieldElem::FieldElem(Field field, long value) : field_(field) {
  if (field.is_rational()) {
    value_ = mpq_class(value);
  } else {
    value_ = reduce(mpz_class(value), field.characteristic());
  }
}

FieldElem FieldElem::from_rational(Field field, const mpq_class& q) {
  if (field.is_rational()) {
    mpq_class c = q;
    c.canonicalize();
    return FieldElem(field, std::variant<std::uint64_t, mpq_class>(c));
  }
  const auto p = field.characteristic();
  const auto den = reduce(q.get_den(), p);
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "denominator vanishes in " + field.selector());
  const auto num = reduce(q.get_num(), p);
  return FieldElem(field, std::variant<std::uint64_t, mpq_class>(mulmod(num, powmod(den, p - 2, p), p)));
}

bool FieldElem::is_zero() const {
  if (field_.is_rational()) return sgn(rational()) == 0;
  return residue() == 0;
}

bool FieldElem::is_one() const {
  if (field_.is_rational()) return rational() == 1;
  return residue() == 1 % field_.characteristic();
}

void FieldElem::require_same_field(const FieldElem& b) const {
  if (field_ != b.field_)
    throw Error(ErrorCode::MixedFields, "operands live in different fields",
                {{"lhs", field_.selector()}, {"rhs", b.field_.selector()}});
}

FieldElem FieldElem::operator-() const {
  if (field_.is_rational()) return FieldElem(field_, std::variant<std::uint64_t, mpq_class>(mpq_class(-rational())));
  const auto p = field_.characteristic();
  return FieldElem(field_, std::variant<std::uint64_t, mpq_class>(residue() == 0 ? 0 : p - residue()));
}

FieldElem FieldElem::inv() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  if (field_.is_rational()) return FieldElem(field_, std::variant<std::uint64_t, mpq_class>(mpq_class(1 / rational())));
  const auto p = field_.characteristic();
  return FieldElem(field_, std::variant<std::uint64_t, mpq_class>(powmod(residue(), p - 2, p)));
}

FieldElem FieldElem::pow(std::uint64_t e) const {
  FieldElem r = one(field_);
  FieldElem b = *this;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

FieldElem& FieldElem::operator+=(const FieldElem& b) {
  require_same_field(b);
  if (field_.is_rational()) {
    std::get<mpq_class>(value_) += b.rational();
  } else {
    const auto p = field_.characteristic();
    auto& v = std::get<std::uint64_t>(value_);
    v = v >= p - b.residue() ? v - (p - b.residue()) : v + b.residue();
  }
  return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& b) { return *this += -b; }

FieldElem& FieldElem::operator*=(const FieldElem& b) {
  require_same_field(b);
  if (field_.is_rational()) {
    std::get<mpq_class>(value_) *= b.rational();
  } else {
    auto& v = std::get<std::uint64_t>(value_);
    v = mulmod(v, b.residue(), field_.characteristic());
  }
  return *this;
}

bool operator==(const FieldElem& a, const FieldElem& b) {
  return a.field_ == b.field_ && a.value_ == b.value_;
}

std::string FieldElem::to_string() const {
  if (field_.is_rational()) return rational().get_str();
  return std::to_string(residue());
}

bool FieldElem::is_negative_rational() const {
  return field_.is_rational() && sgn(rational()) < 0;
}

}  // namespace freealg
