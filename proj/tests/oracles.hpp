#pragma once

#include <bit>
#include <array>
#include <bitset>
#include <map>
#include <stdexcept>
#include <string>
#include <cstdint>
#include <utility>
#include <vector>

#include "freealg/polynomial.hpp"

namespace freealg::testing {

/// Polynomials over F_2 in x, y of degree <= 12, as bit sets indexed by
/// words: a word of length L with letters b_1..b_L (x=0, y=1) sits at
/// 2^L - 1 + (b_1...b_L in binary). Independent of the library arithmetic.
class Gf2Poly {
 public:
  static constexpr std::size_t kMaxLen = 12;
  static constexpr std::size_t kSlots = (std::size_t{1} << (kMaxLen + 1)) - 1;

  static Gf2Poly one() {
    Gf2Poly p;
    p.bits_.set(0);
    return p;
  }

  /// Terms (length, bits) of a library polynomial; coefficients are read mod 2.
  static Gf2Poly from(const Polynomial& a) {
    Gf2Poly p;
    for (const auto& [w, c] : a.terms()) {
      if (c.residue() % 2 == 0) continue;
      std::uint32_t bits = 0;
      for (Letter l : w) bits = (bits << 1) | l;
      p.bits_.flip(index(w.size(), bits));
    }
    return p;
  }

  friend Gf2Poly operator*(const Gf2Poly& a, const Gf2Poly& b) {
    Gf2Poly out;
    const auto ta = a.terms(), tb = b.terms();
    for (const auto& [la, ba] : ta)
      for (const auto& [lb, bb] : tb) out.bits_.flip(index(la + lb, (ba << lb) | bb));
    return out;
  }

  const std::bitset<kSlots>& bits() const { return bits_; }

 private:
  static std::size_t index(std::size_t len, std::uint32_t bits) { return (std::size_t{1} << len) - 1 + bits; }

  std::vector<std::pair<std::size_t, std::uint32_t>> terms() const {
    std::vector<std::pair<std::size_t, std::uint32_t>> out;
    for (std::size_t i = bits_._Find_first(); i < kSlots; i = bits_._Find_next(i)) {
      const auto len = static_cast<std::size_t>(std::bit_width(i + 1) - 1);
      out.emplace_back(len, static_cast<std::uint32_t>(i + 1 - (std::size_t{1} << len)));
    }
    return out;
  }

  std::bitset<kSlots> bits_;
};

/// True when some nonzero noncommutative Q of degree <= 4 has Q(a, b) = 0
/// over F_2: the 31 products of a, b of length <= 4 are linearly dependent.
inline bool gf2_relation_exists(const Polynomial& a, const Polynomial& b) {
  const auto pa = Gf2Poly::from(a), pb = Gf2Poly::from(b);
  std::vector<Gf2Poly> level{Gf2Poly::one()}, all{Gf2Poly::one()};
  for (int len = 1; len <= 4; ++len) {
    std::vector<Gf2Poly> next;
    for (const auto& m : level) {
      next.push_back(m * pa);
      next.push_back(m * pb);
    }
    all.insert(all.end(), next.begin(), next.end());
    level = std::move(next);
  }
  std::vector<std::bitset<Gf2Poly::kSlots>> rows;
  for (const auto& p : all) rows.push_back(p.bits());
  std::size_t rank = 0;
  for (std::size_t col = 0; col < Gf2Poly::kSlots && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && !rows[piv].test(col)) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r != rank && rows[r].test(col)) rows[r] ^= rows[rank];
    ++rank;
  }
  return rank < rows.size();
}

/// All nonzero polynomials over F_2 with at most two terms of degree <= 3.
inline std::vector<Polynomial> gf2_small_polys() {
  const Field f2 = Field::prime(2);
  std::vector<Word> words;
  for (std::size_t len = 0; len <= 3; ++len)
    for (std::uint32_t b = 0; b < (1u << len); ++b) {
      std::vector<Letter> w(len);
      for (std::size_t i = 0; i < len; ++i) w[i] = static_cast<Letter>((b >> (len - 1 - i)) & 1);
      words.emplace_back(std::move(w));
    }
  std::vector<Polynomial> out;
  const auto one = FieldElem::one(f2);
  for (std::size_t i = 0; i < words.size(); ++i) {
    out.push_back(Polynomial::monomial(words[i], one));
    for (std::size_t j = i + 1; j < words.size(); ++j)
      out.push_back(Polynomial::monomial(words[i], one) + Polynomial::monomial(words[j], one));
  }
  return out;
}


/// The map (s, r) -> [u^m, s] + [u^n, r] over F_2 on words of degree <= bound,
/// built from string concatenation. Each unknown is a column bit mask over the
/// words that occur in some image.
class Gf2CommutatorSystem {
 public:
  static constexpr std::size_t kWords = 4;
  using Mask = std::array<std::uint64_t, kWords>;

  Gf2CommutatorSystem(const std::string& u, long m, long n, long bound) {
    for (long len = 0; len <= bound; ++len)
      for (std::uint32_t b = 0; b < (1u << len); ++b) {
        std::string w;
        for (long i = len - 1; i >= 0; --i) w.push_back(((b >> i) & 1) ? 'y' : 'x');
        words_.push_back(w);
      }
    std::string um, un;
    for (long i = 0; i < m; ++i) um += u;
    for (long i = 0; i < n; ++i) un += u;
    for (const auto* power : {&um, &un})
      for (const auto& w : words_) {
        Mask c{};
        flip(c, *power + w);
        flip(c, w + *power);
        columns_.push_back(c);
      }
  }

  std::size_t unknowns() const { return columns_.size(); }

  /// Number of coefficient vectors in the kernel, by Gray-code enumeration.
  std::uint64_t count_solutions() const {
    const std::size_t n = columns_.size();
    if (n >= 63) throw std::length_error("too many unknowns to enumerate");
    Mask acc{};
    std::uint64_t count = 1;
    for (std::uint64_t i = 1; i < (std::uint64_t{1} << n); ++i) {
      const auto& c = columns_[static_cast<std::size_t>(std::countr_zero(i))];
      std::uint64_t any = 0;
      for (std::size_t k = 0; k < kWords; ++k) any |= (acc[k] ^= c[k]);
      count += any == 0;
    }
    return count;
  }

  /// Whether (s, r) maps to zero; coefficients are read mod 2 and terms beyond the bound are rejected.
  bool satisfied(const Polynomial& s, const Polynomial& r) const {
    Mask acc{};
    std::size_t offset = 0;
    for (const auto* p : {&s, &r}) {
      for (const auto& [w, c] : p->terms()) {
        if (c.residue() % 2 == 0) continue;
        std::string text;
        for (Letter l : w) text.push_back(l == 0 ? 'x' : 'y');
        std::size_t i = 0;
        while (i < words_.size() && words_[i] != text) ++i;
        if (i == words_.size()) return false;
        for (std::size_t k = 0; k < kWords; ++k) acc[k] ^= columns_[offset + i][k];
      }
      offset += words_.size();
    }
    for (auto v : acc)
      if (v) return false;
    return true;
  }

 private:
  void flip(Mask& c, const std::string& w) {
    const auto [it, fresh] = rows_.emplace(w, rows_.size());
    if (it->second >= 64 * kWords) throw std::length_error("too many equation rows");
    c[it->second / 64] ^= std::uint64_t{1} << (it->second % 64);
  }

  std::vector<std::string> words_;
  std::map<std::string, std::size_t> rows_;
  std::vector<Mask> columns_;
};

}  // namespace freealg::testing
