#include "freealg/text.hpp"

#include <cctype>
#include <vector>

#include "freealg/error.hpp"

namespace freealg {

namespace {

class Parser {
 public:
  Parser(std::string_view text, Field field, std::size_t alphabet)
      : text_(text), field_(field), alphabet_(alphabet), names_(default_letter_names(alphabet)) {}

  Polynomial parse() {
    Polynomial p = expression();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::SyntaxError, what + " at position " + std::to_string(pos_),
                {{"position", std::to_string(pos_)}, {"text", std::string(text_)}});
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool at_digit() {
    skip_ws();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  std::string digits() {
    skip_ws();
    const auto start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::size_t exponent() {
    const auto s = digits();
    if (s.size() > 6) fail("exponent too large");
    const auto e = std::stoul(s);
    if (e == 0) fail("exponent must be positive");
    return e;
  }

  Polynomial expression() {
    Polynomial acc(field_, alphabet_);
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    for (;;) {
      Polynomial t = term();
      if (negate) acc -= t;
      else acc += t;
      if (accept('+')) negate = false;
      else if (accept('-')) negate = true;
      else break;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = Polynomial::constant(field_, 1, alphabet_);
    if (at_digit()) {
      const auto coeff_pos = pos_;
      mpq_class q{mpz_class(digits())};
      if (accept('/')) {
        mpz_class den(digits());
        if (den == 0) {
          pos_ = coeff_pos;
          throw Error(ErrorCode::BadCoefficient, "zero denominator", {{"position", std::to_string(coeff_pos)}});
        }
        q = mpq_class(q.get_num(), den);
        q.canonicalize();
      }
      try {
        acc = Polynomial::constant(field_, FieldElem::from_rational(field_, q), alphabet_);
      } catch (const Error&) {
        throw Error(ErrorCode::BadCoefficient, "coefficient not representable in " + field_.selector(),
                    {{"position", std::to_string(coeff_pos)}});
      }
      if (!accept('*')) return acc;
    }
    acc = acc * factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }

  Polynomial factor() {
    skip_ws();
    Polynomial base(field_, alphabet_);
    if (accept('(')) {
      base = expression();
      if (!accept(')')) fail("expected ')'");
    } else if (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      const auto start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      std::size_t idx = 0;
      while (idx < names_.size() && names_[idx] != name) ++idx;
      if (idx == names_.size())
        throw Error(ErrorCode::UnknownVariable, "unknown variable '" + name + "'",
                    {{"position", std::to_string(start)}, {"name", name}});
      base = Polynomial::variable(field_, static_cast<Letter>(idx), alphabet_);
    } else if (at_digit()) {
      fail("a coefficient may only lead a term");
    } else {
      fail("expected variable or '('");
    }
    if (accept('^')) return base.pow(exponent());
    return base;
  }

  std::string_view text_;
  Field field_;
  std::size_t alphabet_;
  std::vector<std::string> names_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_poly(std::string_view text, Field field, std::size_t alphabet_size) {
  return Parser(text, field, alphabet_size).parse();
}

std::string print_poly(const Polynomial& p) {
  if (p.is_zero()) return "0";
  const auto names = default_letter_names(p.alphabet_size());
  const auto terms = p.terms();
  std::string out;
  // Terms are stored ascending in deglex; emit degree blocks from the top.
  std::size_t end = terms.size();
  while (end > 0) {
    std::size_t begin = end;
    const auto len = terms[end - 1].first.size();
    while (begin > 0 && terms[begin - 1].first.size() == len) --begin;
    for (std::size_t i = begin; i < end; ++i) {
      const auto& [w, c] = terms[i];
      const bool neg = c.is_negative_rational();
      const FieldElem mag = neg ? -c : c;
      if (out.empty()) out += neg ? "-" : "";
      else out += neg ? " - " : " + ";
      if (w.empty()) {
        out += mag.to_string();
      } else {
        if (!mag.is_one()) out += mag.to_string() + "*";
        out += to_string(w, names);
      }
    }
    end = begin;
  }
  return out;
}

}  // namespace freealg
