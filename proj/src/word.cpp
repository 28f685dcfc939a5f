#include "freealg/word.hpp"

#include <algorithm>
#include <string_view>

namespace freealg {

std::size_t Word::count(Letter l) const {
  return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), l));
}

Word Word::subword(std::size_t pos, std::size_t len) const {
  return Word(std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                                  letters_.begin() + static_cast<std::ptrdiff_t>(pos + len)));
}

Word Word::pow(std::size_t e) const {
  std::vector<Letter> out;
  out.reserve(letters_.size() * e);
  for (std::size_t i = 0; i < e; ++i) out.insert(out.end(), letters_.begin(), letters_.end());
  return Word(std::move(out));
}

bool Word::starts_with(const Word& w) const {
  return w.size() <= size() && std::equal(w.begin(), w.end(), letters_.begin());
}

bool Word::ends_with(const Word& w) const {
  return w.size() <= size() && std::equal(w.begin(), w.end(), letters_.end() - static_cast<std::ptrdiff_t>(w.size()));
}

Word operator*(const Word& a, const Word& b) {
  std::vector<Letter> out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return Word(std::move(out));
}

bool DegLex::operator()(const Word& a, const Word& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Letter l : w) {
    h ^= l;
    h *= 1099511628211ull;
  }
  return h ^ w.size();
}

std::vector<std::string> default_letter_names(std::size_t alphabet_size) {
  if (alphabet_size == 2) return {"x", "y"};
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= alphabet_size; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

std::string to_string(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!out.empty()) out += '*';
    out += names.at(w[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

bool is_primitive(const Word& w) {
  if (w.empty()) return false;
  // w is a proper power iff it occurs inside ww at an offset strictly between 0 and |w|.
  std::string doubled(w.begin(), w.end());
  doubled.append(w.begin(), w.end());
  const std::string_view needle(doubled.data(), w.size());
  return std::string_view(doubled).find(needle, 1) == w.size();
}

}  // namespace freealg
