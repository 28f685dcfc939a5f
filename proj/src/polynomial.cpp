#include "freealg/polynomial.hpp"

#include <algorithm>
#include <unordered_map>

#include "freealg/error.hpp"

namespace freealg {

namespace {

bool term_less(const Polynomial::Term& a, const Polynomial::Term& b) { return DegLex{}(a.first, b.first); }

}  // namespace

Polynomial Polynomial::constant(Field field, const FieldElem& c, std::size_t alphabet_size) {
  if (c.field() != field) throw Error(ErrorCode::MixedFields, "constant from a different field");
  return monomial(Word{}, c, alphabet_size);
}

Polynomial Polynomial::monomial(const Word& w, const FieldElem& c, std::size_t alphabet_size) {
  Polynomial p(c.field(), alphabet_size);
  for (Letter l : w)
    if (l >= alphabet_size) throw Error(ErrorCode::AlphabetMismatch, "letter outside alphabet");
  if (!c.is_zero()) p.terms_.emplace_back(w, c);
  return p;
}

Polynomial Polynomial::variable(Field field, Letter l, std::size_t alphabet_size) {
  return monomial(Word::letter(l), FieldElem::one(field), alphabet_size);
}

Polynomial Polynomial::from_terms(Field field, std::size_t alphabet_size, std::vector<Term> terms) {
  Polynomial p(field, alphabet_size);
  for (const auto& [w, c] : terms) {
    if (c.field() != field)
      throw Error(ErrorCode::MixedFields, "coefficient from a different field",
                  {{"expected", field.selector()}, {"got", c.field().selector()}});
    for (Letter l : w)
      if (l >= alphabet_size) throw Error(ErrorCode::AlphabetMismatch, "letter outside alphabet");
  }
  std::sort(terms.begin(), terms.end(), term_less);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
      if (p.terms_.back().second.is_zero()) p.terms_.pop_back();
    } else if (!t.second.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

FieldElem Polynomial::coefficient(const Word& w) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), w,
                             [](const Term& t, const Word& x) { return DegLex{}(t.first, x); });
  if (it != terms_.end() && it->first == w) return it->second;
  return FieldElem::zero(field_);
}

const Polynomial::Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw Error(ErrorCode::ZeroPolynomial, "zero polynomial has no leading term");
  return terms_.back();
}

Polynomial Polynomial::homogeneous_component(std::size_t d) const {
  Polynomial out(field_, alphabet_);
  for (const auto& t : terms_)
    if (t.first.size() == d) out.terms_.push_back(t);
  return out;
}

bool Polynomial::contains_letter(Letter l) const {
  return std::any_of(terms_.begin(), terms_.end(), [l](const Term& t) { return t.first.count(l) > 0; });
}

void Polynomial::require_compatible(const Polynomial& b) const {
  if (field_ != b.field_)
    throw Error(ErrorCode::MixedFields, "polynomials over different fields",
                {{"lhs", field_.selector()}, {"rhs", b.field_.selector()}});
  if (alphabet_ != b.alphabet_)
    throw Error(ErrorCode::AlphabetMismatch, "polynomials over different alphabets",
                {{"lhs", std::to_string(alphabet_)}, {"rhs", std::to_string(b.alphabet_)}});
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& b) {
  require_compatible(b);
  std::vector<Term> merged;
  merged.reserve(terms_.size() + b.terms_.size());
  auto i = terms_.begin();
  auto j = b.terms_.begin();
  while (i != terms_.end() || j != b.terms_.end()) {
    if (j == b.terms_.end() || (i != terms_.end() && term_less(*i, *j))) {
      merged.push_back(std::move(*i++));
    } else if (i == terms_.end() || term_less(*j, *i)) {
      merged.push_back(*j++);
    } else {
      FieldElem c = i->second + j->second;
      if (!c.is_zero()) merged.emplace_back(std::move(i->first), std::move(c));
      ++i;
      ++j;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& b) { return *this += -b; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.require_compatible(b);
  Polynomial out(a.field_, a.alphabet_);
  if (a.is_zero() || b.is_zero()) return out;
  std::unordered_map<Word, FieldElem, WordHash> acc;
  acc.reserve(a.size() * b.size());
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) {
      auto [it, inserted] = acc.try_emplace(wa * wb, ca * cb);
      if (!inserted) it->second += ca * cb;
    }
  }
  out.terms_.reserve(acc.size());
  for (auto& [w, c] : acc)
    if (!c.is_zero()) out.terms_.emplace_back(w, std::move(c));
  std::sort(out.terms_.begin(), out.terms_.end(), term_less);
  return out;
}

Polynomial operator*(const FieldElem& c, const Polynomial& a) {
  Polynomial out(a.field_, a.alphabet_);
  if (c.field() != a.field_)
    throw Error(ErrorCode::MixedFields, "scalar from a different field");
  if (c.is_zero()) return out;
  out.terms_ = a.terms_;
  for (auto& t : out.terms_) t.second *= c;
  return out;
}

Polynomial Polynomial::pow(std::size_t e) const {
  Polynomial r = constant(field_, 1, alphabet_);
  Polynomial b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

Polynomial commutator(const Polynomial& a, const Polynomial& b) { return a * b - b * a; }

HomogeneousForm leading_form(const Polynomial& a) {
  if (a.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "leading form of zero");
  const auto d = static_cast<std::size_t>(a.degree().value());
  return {a.homogeneous_component(d), static_cast<long>(d)};
}

Degree weighted_degree(const Polynomial& a, std::span<const long> weights) {
  if (weights.size() != a.alphabet_size() ||
      std::any_of(weights.begin(), weights.end(), [](long w) { return w < 1; }))
    throw Error(ErrorCode::BadWeights, "need one positive weight per letter",
                {{"alphabet", std::to_string(a.alphabet_size())}, {"weights", std::to_string(weights.size())}});
  Degree best = Degree::minus_infinity();
  for (const auto& [w, c] : a.terms()) {
    long sum = 0;
    for (Letter l : w) sum += weights[l];
    best = std::max(best, Degree(sum));
  }
  return best;
}

namespace {

// Terms sorted lexicographically; [first, last) share their first `depth` letters.
Polynomial substitute_trie(std::span<const Polynomial::Term> terms, std::size_t depth,
                           std::span<const Polynomial> images) {
  const auto& proto = images[0];
  Polynomial out(proto.field(), proto.alphabet_size());
  std::size_t i = 0;
  if (!terms.empty() && terms[0].first.size() == depth) {
    out += Polynomial::constant(proto.field(), terms[0].second, proto.alphabet_size());
    i = 1;
  }
  while (i < terms.size()) {
    const Letter l = terms[i].first[depth];
    std::size_t j = i;
    while (j < terms.size() && terms[j].first[depth] == l) ++j;
    out += images[l] * substitute_trie(terms.subspan(i, j - i), depth + 1, images);
    i = j;
  }
  return out;
}

}  // namespace

Polynomial substitute(const Polynomial& p, std::span<const Polynomial> images) {
  if (images.size() != p.alphabet_size())
    throw Error(ErrorCode::ArityMismatch, "need one image per letter",
                {{"alphabet", std::to_string(p.alphabet_size())}, {"images", std::to_string(images.size())}});
  for (const auto& im : images) {
    if (im.field() != p.field())
      throw Error(ErrorCode::MixedFields, "image over a different field");
    if (im.alphabet_size() != images[0].alphabet_size())
      throw Error(ErrorCode::AlphabetMismatch, "images over different alphabets");
  }
  std::vector<Polynomial::Term> lex(p.terms().begin(), p.terms().end());
  std::sort(lex.begin(), lex.end(), [](const auto& a, const auto& b) {
    return std::lexicographical_compare(a.first.begin(), a.first.end(), b.first.begin(), b.first.end());
  });
  return substitute_trie(lex, 0, images);
}

}  // namespace freealg
