#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "freealg/degree.hpp"
#include "freealg/field.hpp"
#include "freealg/word.hpp"

namespace freealg {

/// Element of the free associative algebra K<x_1..x_n>: a finite map from
/// words to nonzero coefficients. Terms are kept sorted in deglex order, so
/// the last term is the leading one.
class Polynomial {
 public:
  using Term = std::pair<Word, FieldElem>;

  explicit Polynomial(Field field, std::size_t alphabet_size = 2)
      : field_(field), alphabet_(alphabet_size) {}

  static Polynomial constant(Field field, const FieldElem& c, std::size_t alphabet_size = 2);
  static Polynomial constant(Field field, long c, std::size_t alphabet_size = 2) {
    return constant(field, FieldElem(field, c), alphabet_size);
  }
  static Polynomial monomial(const Word& w, const FieldElem& c, std::size_t alphabet_size = 2);
  static Polynomial variable(Field field, Letter l, std::size_t alphabet_size = 2);
  /// Sums duplicate words and drops zeros; throws AlphabetMismatch on an
  /// out-of-range letter and MixedFields on a foreign coefficient.
  static Polynomial from_terms(Field field, std::size_t alphabet_size, std::vector<Term> terms);

  Field field() const noexcept { return field_; }
  std::size_t alphabet_size() const noexcept { return alphabet_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Zero or a nonzero scalar.
  bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.empty()); }

  Degree degree() const noexcept {
    return terms_.empty() ? Degree::minus_infinity() : Degree(static_cast<long>(terms_.back().first.size()));
  }
  FieldElem coefficient(const Word& w) const;
  FieldElem constant_term() const { return coefficient(Word{}); }
  /// Deglex-largest term. Throws ZeroPolynomial on zero.
  const Term& leading_term() const;
  /// Sum of the terms whose words have exactly length d.
  Polynomial homogeneous_component(std::size_t d) const;
  /// True iff some word contains the letter.
  bool contains_letter(Letter l) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& b);
  Polynomial& operator-=(const Polynomial& b);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const FieldElem& c, const Polynomial& a);
  Polynomial pow(std::size_t e) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.field_ == b.field_ && a.alphabet_ == b.alphabet_ && a.terms_ == b.terms_;
  }

 private:
  void require_compatible(const Polynomial& b) const;

  Field field_;
  std::size_t alphabet_;
  std::vector<Term> terms_;
};

/// A polynomial all of whose words share the length `degree`.
struct HomogeneousForm {
  Polynomial form;
  long degree;
};

/// ab - ba.
Polynomial commutator(const Polynomial& a, const Polynomial& b);

/// Homogeneous component of maximal degree. Throws ZeroPolynomial.
HomogeneousForm leading_form(const Polynomial& a);

/// max over the support of the summed letter weights; -inf for zero.
/// Throws BadWeights unless there is one weight >= 1 per letter.
Degree weighted_degree(const Polynomial& a, std::span<const long> weights);

/// Replaces letter i by images[i] in every word and sums with the
/// coefficients of p; a ring homomorphism in p.
Polynomial substitute(const Polynomial& p, std::span<const Polynomial> images);

}  // namespace freealg
