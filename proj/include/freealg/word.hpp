#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace freealg {

using Letter = std::uint8_t;

/// A monomial of the free algebra: a finite sequence of letter indices.
/// The empty word is the unit monomial.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  static Word letter(Letter l) { return Word{l}; }

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  std::span<const Letter> letters() const noexcept { return letters_; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  /// Number of occurrences of `l`.
  std::size_t count(Letter l) const;
  Word subword(std::size_t pos, std::size_t len) const;
  Word pow(std::size_t e) const;

  bool starts_with(const Word& w) const;
  bool ends_with(const Word& w) const;

  friend Word operator*(const Word& a, const Word& b);
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

/// Degree-then-lexicographic order: shorter words first, equal lengths
/// compared letter by letter.
struct DegLex {
  bool operator()(const Word& a, const Word& b) const;
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

/// Letter names for an alphabet of the given size: {x, y} for rank 2,
/// x1..xn otherwise.
std::vector<std::string> default_letter_names(std::size_t alphabet_size);

/// "x*y^2*x"; the empty word prints as "1".
std::string to_string(const Word& w, const std::vector<std::string>& names);

/// True iff w is not a proper power of a shorter word (w nonempty).
bool is_primitive(const Word& w);

}  // namespace freealg
