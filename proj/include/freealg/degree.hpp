#pragma once

#include <compare>
#include <limits>
#include <string>

namespace freealg {

/// Integer degree extended by a bottom element -inf (the degree of zero),
/// ordered below every integer.
class Degree {
 public:
  constexpr Degree() = default;  // -inf
  constexpr Degree(long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  static constexpr Degree minus_infinity() { return Degree{}; }

  constexpr bool is_finite() const { return value_ != kNegInf; }
  constexpr long value() const { return value_; }

  friend constexpr auto operator<=>(Degree, Degree) = default;
  friend constexpr Degree operator+(Degree a, Degree b) {
    if (!a.is_finite() || !b.is_finite()) return {};
    return Degree{a.value_ + b.value_};
  }

  std::string to_string() const { return is_finite() ? std::to_string(value_) : "-inf"; }

 private:
  static constexpr long kNegInf = std::numeric_limits<long>::min();
  long value_ = kNegInf;
};

}  // namespace freealg
