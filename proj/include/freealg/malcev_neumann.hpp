#pragma once

// Truncated Mal'tsev-Neumann series over the free group on {x, y}.
//
// A series is a finite map from reduced group words to coefficients together
// with an exactness floor: every term of degree >= floor is known exactly and
// nothing is known below it. Degree is the exponent sum. Well-ordering of
// infinite supports is not modeled; the finite exact window stands in for it.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "freealg/degree.hpp"
#include "freealg/field.hpp"
#include "freealg/polynomial.hpp"

namespace freealg {

/// Freely reduced word in x, y and their inverses. Letters are stored as
/// +1 (x), -1 (x^-1), +2 (y), -2 (y^-1).
class GroupWord {
 public:
  GroupWord() = default;
  /// Reduces the input.
  explicit GroupWord(const std::vector<std::int8_t>& letters);

  static GroupWord x() { return GroupWord({1}); }
  static GroupWord y() { return GroupWord({2}); }
  static GroupWord from_word(const Word& w);

  const std::vector<std::int8_t>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool is_identity() const { return letters_.empty(); }
  long degree() const;
  bool has_inverse_letter() const;

  GroupWord inverse() const;
  GroupWord pow(long e) const;

  /// Nonnegative word as a free-algebra word; nullopt if an inverse letter occurs.
  std::optional<Word> to_word() const;

  friend bool operator==(const GroupWord&, const GroupWord&) = default;

 private:
  std::vector<std::int8_t> letters_;
};

GroupWord gw_mul(const GroupWord& a, const GroupWord& b);
inline GroupWord operator*(const GroupWord& a, const GroupWord& b) { return gw_mul(a, b); }

/// Degree first, then lexicographic with x < x^-1 < y < y^-1.
struct GroupWordLess {
  bool operator()(const GroupWord& a, const GroupWord& b) const;
};

/// "x*y^-1*x^2", "1" for the identity.
std::string to_string(const GroupWord& w);

/// w with w^n = g, if one exists (unique in a free group).
std::optional<GroupWord> group_root(const GroupWord& g, long n);

/// Shortest r with w = r^m for some m; w itself when w is primitive.
GroupWord primitive_root(const GroupWord& w);

class TruncatedSeries {
 public:
  using Terms = std::map<GroupWord, FieldElem, GroupWordLess>;

  /// Exact zero.
  explicit TruncatedSeries(Field field) : field_(field) {}
  /// Throws MixedFields on coefficients from another field. Terms below
  /// `floor` are dropped.
  TruncatedSeries(Field field, Terms terms, std::optional<long> floor = std::nullopt);

  static TruncatedSeries monomial(const GroupWord& w, const FieldElem& c);
  static TruncatedSeries from_polynomial(const Polynomial& p);

  Field field() const { return field_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Exact everywhere when empty.
  std::optional<long> floor() const { return floor_; }
  bool is_exact() const { return !floor_; }
  Degree top() const;
  FieldElem coefficient(const GroupWord& w) const;
  /// Terms of exactly this degree.
  Terms slice(long degree) const;
  /// Drops terms below d and lowers exactness to d.
  TruncatedSeries truncated(long d) const;
  /// Free-algebra polynomial when every term is a nonnegative word.
  std::optional<Polynomial> to_polynomial() const;

  TruncatedSeries operator-() const;
  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const FieldElem& c, const TruncatedSeries& a);
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.field_ == b.field_ && a.floor_ == b.floor_ && a.terms_ == b.terms_;
  }

 private:
  Field field_;
  Terms terms_;
  std::optional<long> floor_;
};

/// Product with floor max(a.floor + b.top, b.floor + a.top) (an unknown
/// tail of a zero series sits just below its floor). Throws MixedFields,
/// and FloorCollapse when no exact term survives above a finite floor.
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// Parses terms like "x^2*y^-1*x - 3*y + 1" (integer exponents may be negative).
TruncatedSeries parse_series(const std::string& text, Field field, std::optional<long> floor = std::nullopt);

/// Highest degree first, "0" for zero; the floor is not printed.
std::string print_series(const TruncatedSeries& s);

inline constexpr int kDefaultBasisRounds = 3;

/// Square root over F_2. The top slice of g must be a single word w^2; the
/// result h has top word w and h^2 + g has no term of degree >= -window. h is
/// exact down to floor -window - deg w. Each step solves u c + c u = top slice
/// of the residual over the words w^-1 W, W w^-1 closed `basis_rounds` times
/// under conjugation by w; a slice word in the centralizer of w that is an even
/// power z^2 of the root of w is absorbed by adding z to h.
/// Errors: PreconditionFailed (char != 2), NotASquareLeading, InsufficientFloor,
/// BasisExhausted.
TruncatedSeries mn_sqrt_char2(const TruncatedSeries& g, long window, int basis_rounds = kDefaultBasisRounds);

/// n-th root via the linear map c -> sum_i w^i c w^(n-1-i). char 2 with n = 2
/// goes to mn_sqrt_char2. Errors: NotAnNthPowerLeading, CharDividesN,
/// InsufficientFloor, BasisExhausted, BadArgument (n < 2).
TruncatedSeries mn_nth_root(const TruncatedSeries& g, long n, long window, int basis_rounds = kDefaultBasisRounds);

struct FractionalPower {
  TruncatedSeries value;
  long m, n;        // in lowest terms
  bool normalized;  // the input fraction was not in lowest terms
};

/// h^m with h = mn_nth_root(g, n, window + max(0, m - n) deg w), so that the
/// product is exact down to -window. Errors: BadArgument when n divides m or
/// m < 1, plus those of the root solver and series_mul.
FractionalPower mn_fractional_power(const TruncatedSeries& g, long m, long n, long window,
                                    int basis_rounds = kDefaultBasisRounds);

/// Highest-degree stored word of positive degree containing an inverse
/// letter, ties broken by GroupWordLess (smallest wins). nullopt means none
/// in the exact region, which proves nothing about the full series.
std::optional<GroupWord> negative_power_witness(const TruncatedSeries& s);

enum class SummandVariant { XyPlusYx, XyPlusU };

/// g = ((xy)^k x)^2 + xy + yx over F_2 (or + xy + (xy)^k x for XyPlusU), exact.
/// Throws BadK for k < 2.
TruncatedSeries build_theorem9_input(long k, SummandVariant variant = SummandVariant::XyPlusYx);

}  // namespace freealg
